"""Static figures from driftlab run directories.

Everything here works off the flat CSV/JSON artifacts a run directory
contains; nothing recomputes flows or posteriors.
"""

__version__ = "0.1.0"
