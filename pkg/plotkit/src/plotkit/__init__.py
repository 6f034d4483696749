"""Figure scripts for netslice experiment outputs.

Reads the CSV/JSON files written by the ``netslice experiment`` command and
renders histogram, scatter and dendrogram figures.  The package never talks
to netslice directly; the file formats are the only contract.
"""

__version__ = "0.1.0"
