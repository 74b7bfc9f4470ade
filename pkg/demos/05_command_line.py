"""The command line front end, driven from Python."""

# %%
import tempfile
from importlib.resources import files
from pathlib import Path

from qwalg.cli import main

fixture = str(files("qwalg.data").joinpath("orthomodular6.qw"))
main(["check", fixture])
main(["analyze", fixture])

# %% Quotients print as a loadable document with the class map in comments.
main(["quotient", str(files("qwalg.data").joinpath("weakly_linear5.qw")), "--ds", "0,a,b,c,1"])

# %% Search writes one file per model.
with tempfile.TemporaryDirectory() as out:
    main(["search", "--order", "5", "--out", out])
    print(Path(out, "qw5_001.qw").read_text())
