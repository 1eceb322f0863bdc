from .pair_spec import PairSpec, parse_pair
from .cli_commands import COMMANDS, EXIT_CAP, EXIT_DISCREPANCY, EXIT_OK, EXIT_USAGE
