"""Figure rendering for solwig CSV outputs.

Standalone: consumes only the public CSV schema (``x,k,re_w,im_w,abs_w``
fields and ``x,value`` profiles), never the solwig library itself.
"""

from .csvio import Table, read_table
from .render import FigureSpec, RenderSummary, render

__version__ = "0.1.0"

__all__ = ["FigureSpec", "RenderSummary", "Table", "read_table", "render"]
