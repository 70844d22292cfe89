"""Type-2 hesitant fuzzy linguistic term sets for group decision making."""

from .aggregation import CutSet, aggregate_all, fwa, lwa
from .baselines import NineParamIT2, closeness, likelihood_index, wlq_rank_value
from .entropy import (beta, comprehensive_entropy, entropy_report, entropy_sweep, hesitant_entropy,
                      t1_comprehensive, t1_fuzzy_entropy, t2_fuzzy_entropy)
from .envelope import EnvelopeConfig, T2Envelope, owa_weights, represent_response, t1_envelope, t2_envelope
from .io import Survey, bundled_lts, bundled_survey, load_lts, load_survey
from .it2 import (IT2TrFN, SampledFOU, Trapezoid, ekm_centroid, it2_fuzziness, membership,
                  scalar_fuzziness, yager_fuzziness)
from .linguistic import (CLE, LinguisticTermSet, T2HFLTS, complement, intersection, parse_cle,
                         render_cle, transform, union)
from .pipeline import RunConfig, RunResult, run
from .ranking import RankMatrix, ScoreTable, centroid_rank, final_ranking, score

__version__ = "0.1.0"
