"""Mining itemsets that recur at (nearly) equidistant positions."""

from .balanceclat import BalancedPatternResult, MiningParams, grow, mine_balanced
from .datagen import GeneratorConfig, generate, generate_random
from .histogram import (
    AllPairsHistogram,
    PatternStats,
    SuccessiveHistogram,
    UndefinedStatsError,
    balance_value,
    build_histograms,
    stats_plain,
    stats_restricted,
)
from .ingest import BucketConfig, Event, bucket, parse_events
from .stability import StabilityParams, StabilityScore, StablePatternResult, mine_stable, stability_value
from .transactions import (
    ParseError,
    TransactionDatabase,
    distance,
    format_database,
    parse_database,
    read_database,
    save_database,
    tidset_of,
)

__version__ = "0.1.0"
