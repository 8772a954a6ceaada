from src.core.cohomology.families import LinearFamily
from src.core.cohomology.line_bundles import CohomologyQuery, euler_characteristic, h_line, h_q

__all__ = ["CohomologyQuery", "LinearFamily", "euler_characteristic", "h_line", "h_q"]
