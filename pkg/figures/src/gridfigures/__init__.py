"""Figure renderers for gridcommons output files.

Read-only consumers of the documented schemas (raster.txt, summary.csv,
sweep.csv); one script per figure kind. State colors follow the fixed
convention: cooperate (-1) white, ignore (0) black, defect (+1) red.
"""

__version__ = "0.1.0"

STATE_COLORS = {
    -1: (255, 255, 255),  # cooperate
    0: (0, 0, 0),         # ignore
    1: (255, 0, 0),       # defect
}
