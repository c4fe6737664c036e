"""Social ranking solutions over coalitional rankings with variable domains."""

from socrank.model import EMPTY_RANKING, Roster, SocialRelation, Verdict
from socrank.solutions import SRS_NAMES, apply, compare, explain, get_srs

__all__ = [
    "EMPTY_RANKING",
    "Roster",
    "SRS_NAMES",
    "SocialRelation",
    "Verdict",
    "apply",
    "compare",
    "explain",
    "get_srs",
]
__version__ = "0.1.0"
