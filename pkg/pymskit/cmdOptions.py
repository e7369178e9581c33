import argparse
import collections.abc

import utils
from configVar import config_vars
from .mskitException import MskitUsageError


class OptionToConfigVar:
    """ when attribute of CommandLineOptions is get or set
        OptionToConfigVar will read/write it to configVar

        if set_value is provided to __init__, __set__ stores set_value instead of
        the parsed value, useful for flags where only the presence matters.
    """

    def __init__(self, set_value=None):
        self.set_value = set_value

    def __set_name__(self, owner, name):
        self.var_name = name

    def __get__(self, instance, owner):
        retVal = None
        if self.var_name in config_vars:
            retVal = str(config_vars[self.var_name])
        return retVal

    def __set__(self, instance, value):
        if value is not None:
            if self.set_value is not None:
                config_vars[self.var_name] = self.set_value
            elif isinstance(value, collections.abc.Sequence) and not isinstance(value, str):
                config_vars[self.var_name] = value
            else:
                config_vars[self.var_name] = str(value)


class CommandLineOptions(object):
    """ namespace object to give to parse_args
        holds command line options
    """
    __MAIN_COMMAND__ = OptionToConfigVar()
    __THEOREM_ID__ = OptionToConfigVar()
    __SEED__ = OptionToConfigVar()
    __TRIALS__ = OptionToConfigVar()
    __DEGREE_RANGE__ = OptionToConfigVar()
    __JSON_OUT_FILE__ = OptionToConfigVar()
    __THETA__ = OptionToConfigVar()
    __ALPHA__ = OptionToConfigVar()
    __PHI__ = OptionToConfigVar()
    __WINDOW__ = OptionToConfigVar()
    __GRID_SIZE__ = OptionToConfigVar()
    __BASIS_POINTS__ = OptionToConfigVar()

    def __init__(self) -> None:
        self.mode = None
        self.define = None
        self.tol = None

    def __str__(self):
        return "\n".join([''.join((n, ": ", str(v))) for n, v in sorted(vars(self).items())])


all_command_details = {
    'check':      {'mode': 'verify', 'options': ('theorem', 'seed', 'run', 'window', 'json'), 'help': 'run the randomized check of one theorem'},
    'suite':      {'mode': 'verify', 'options': ('seed', 'json'), 'help': 'run every registered check with its default configuration'},
    'gcd':        {'mode': 'compute', 'options': ('theta', 'alpha', 'json'), 'help': 'gcd and lcm of two Blaschke products'},
    'basis':      {'mode': 'compute', 'options': ('theta', 'grid', 'points', 'json'), 'help': 'orthonormal basis of a model space and its Gram residual'},
    'atto':       {'mode': 'compute', 'options': ('theta', 'alpha', 'phi', 'grid', 'json'), 'help': 'matrix and norm of an asymmetric truncated Toeplitz operator'},
    'intertwine': {'mode': 'compute', 'options': ('theta', 'alpha', 'grid', 'json'), 'help': 'solutions of S_alpha A = A S_theta and their symbols'},
    'dual':       {'mode': 'compute', 'options': ('theta', 'alpha', 'phi', 'window', 'json'), 'help': 'classify a symbol of a dual truncated Toeplitz operator'},
    'version':    {'mode': 'compute', 'options': (), 'help': 'display mskit version'},
}


def prepare_args_parser(in_command):
    """
    Prepare the parser for command line arguments
    """
    command_names = sorted(all_command_details.keys())

    # if in_command is None - just return the command names
    if in_command is None:
        return None, command_names

    parser = argparse.ArgumentParser(description='mskit: model spaces, intertwiners and dual truncated Toeplitz operators',
                                     fromfile_prefix_chars='@',
                                     formatter_class=argparse.ArgumentDefaultsHelpFormatter)
    subparsers = parser.add_subparsers(dest='__MAIN_COMMAND__', help='sub-command help')
    subparsers.required = True

    # a known command gets only its own sub parser, anything else gets all so argparse can complain properly
    commands_to_add = [in_command] if in_command in all_command_details else command_names
    for command in commands_to_add:
        add_command_parser(subparsers, command, all_command_details[command])

    return parser, command_names


def add_command_parser(subparsers, in_command, command_details):
    command_parser = subparsers.add_parser(in_command, help=command_details['help'])
    command_parser.set_defaults(mode=command_details['mode'])
    options = command_details['options']

    if 'theorem' in options:
        command_parser.add_argument('__THEOREM_ID__',
                                    metavar='theorem-id',
                                    help="id of a registered check, e.g. thm-inter")

    if 'seed' in options:
        seed_options = command_parser.add_argument_group(description='randomness:')
        seed_options.add_argument('--seed',
                                  required=False,
                                  metavar='N',
                                  dest='__SEED__',
                                  help="seed of the trial generators")

    if 'run' in options:
        run_options = command_parser.add_argument_group(description='check arguments:')
        run_options.add_argument('--trials',
                                 required=False,
                                 metavar='K',
                                 dest='__TRIALS__',
                                 help="number of random trials, default is the check's own")
        run_options.add_argument('--deg',
                                 required=False,
                                 metavar='a..b',
                                 dest='__DEGREE_RANGE__',
                                 help="range of Blaschke degrees")
        run_options.add_argument('--tol',
                                 required=False,
                                 action='append',
                                 metavar='name=value',
                                 dest='tol',
                                 help="override a tolerance for this run, may be repeated")

    if 'theta' in options:
        product_options = command_parser.add_argument_group(description='Blaschke products, inline json or path to json file:')
        product_options.add_argument('--theta',
                                     required=True,
                                     metavar='json',
                                     dest='__THETA__',
                                     help='{"constant": [re, im], "zeros": [{"point": [re, im], "mult": k}]}')
        if 'alpha' in options:
            product_options.add_argument('--alpha',
                                         required=True,
                                         metavar='json',
                                         dest='__ALPHA__',
                                         help="same form as --theta")

    if 'phi' in options:
        symbol_options = command_parser.add_argument_group(description='symbol, inline json or path to json file:')
        symbol_options.add_argument('--phi',
                                    required=True,
                                    metavar='json',
                                    dest='__PHI__',
                                    help='{"lo": k0, "coefficients": [[re, im], ...]}')

    if 'grid' in options:
        grid_options = command_parser.add_argument_group(description='quadrature:')
        grid_options.add_argument('--grid',
                                  required=False,
                                  metavar='N',
                                  dest='__GRID_SIZE__',
                                  help="grid size, raised to what the zeros require")

    if 'points' in options:
        points_options = command_parser.add_argument_group(description='output:')
        points_options.add_argument('--points',
                                    required=False,
                                    metavar='M',
                                    dest='__BASIS_POINTS__',
                                    help="number of equally spaced grid points to print samples at")

    if 'window' in options:
        window_options = command_parser.add_argument_group(description='truncated Laurent window:')
        window_options.add_argument('--window',
                                    required=False,
                                    metavar='lo,hi,guard',
                                    dest='__WINDOW__',
                                    help="window of Laurent indices, pass as --window=lo,hi,guard; default grows from WINDOW_LO, WINDOW_HI")

    if 'json' in options:
        json_options = command_parser.add_argument_group(description='output:')
        json_options.add_argument('--json',
                                  required=False,
                                  metavar='path-to-output-file',
                                  dest='__JSON_OUT_FILE__',
                                  help="write json here instead of stdout")

    general_options = command_parser.add_argument_group(description='general:')
    general_options.add_argument('--define',
                                 required=False,
                                 default=False,
                                 nargs=1,
                                 metavar='define',
                                 dest='define',
                                 help="define variable(s) format: X=y,A=b")
    general_options.add_argument('--no-stdout',
                                 required=False,
                                 action='store_const',
                                 const='__NO_STDOUT__',
                                 help="do not output to stdout")
    general_options.add_argument('--no-system-log',
                                 required=False,
                                 action='store_const',
                                 const='__NO_SYSLOG__',
                                 help="do not output to system log")
    general_options.add_argument('--log',
                                 required=False,
                                 nargs='+',
                                 metavar='log_file',
                                 dest='__LOG_FILE__',
                                 help="log to file(s)")
    return command_parser


def read_command_line_options(name_space_obj, arg_list=None):
    """ parse command line options """

    command_name = arg_list[0] if arg_list else ""
    parser, command_names = prepare_args_parser(command_name)
    parser.parse_args(arg_list, namespace=name_space_obj)
    return command_names


# typed values of command line payloads, bad values become MskitUsageError

def _usage(what: str, parse, *args):
    try:
        return parse(*args)
    except ValueError as ex:
        raise MskitUsageError(f"{what}: {ex}", ex)


def read_json_payload(text: str, what: str):
    """ inline json, or the path of a file holding json """
    return _usage(what, utils.read_json_or_file, text)


def parse_degree_range(text: str):
    """ 'a..b' -> (a, b) """
    return _usage("--deg", utils.parse_int_range, text)


def parse_window(text: str):
    """ 'lo,hi,guard' -> (lo, hi, guard) """
    values = _usage("--window", utils.parse_int_tuple, text)
    if len(values) != 3:
        raise MskitUsageError(f"--window: expected lo,hi,guard, got '{text}'")
    return values


def parse_tolerance_overrides(items):
    """ ['NAME=value', ...] -> {NAME: value} """
    overrides = dict()
    for item in items:
        name, value = _usage("--tol", utils.parse_name_value, item)
        overrides[name] = _usage(f"--tol {name}", float, value)
    return overrides


def parse_int(text: str, what: str, minimum: int = 1) -> int:
    value = _usage(what, int, text)
    if value < minimum:
        raise MskitUsageError(f"{what} should be at least {minimum}, got {value}")
    return value
