import sys
import os
import string
import random
import datetime
import logging
import platform
from pathlib import Path

import appdirs

from pymskit.cmdOptions import CommandLineOptions, read_command_line_options
from pymskit.mskitException import MskitException, MskitUsageError, UnknownTheorem
from utils.log_utils import config_logger

log = logging.getLogger()
log.setLevel(logging.DEBUG)

EXIT_PASS, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


def get_path_to_mskit_app():
    """
    @return: returns the path to the mskit launcher
    """
    application_path = None
    if getattr(sys, 'frozen', False):
        application_path = Path(sys.executable).resolve()
    elif __file__:
        application_path = Path(__file__).resolve().parent.parent.joinpath('mskit')
    return application_path


def get_data_folder():
    """ the folder holding defaults/, parent of the launcher """
    return Path(get_path_to_mskit_app()).parent


class InvocationReporter(object):
    def __init__(self, argv) -> None:
        self.start_time = datetime.datetime.now()
        self.random_invocation_name = ''.join(random.choice(string.ascii_lowercase) for i in range(16))
        self.argv = argv.copy()

    def __enter__(self):
        try:
            config_logger(self.argv)
            log.debug(f"===== {self.random_invocation_name} =====")
            log.debug(f"Start: {self.start_time}")
            log.debug(f"mskit: {self.argv[0]}")
            log.debug(f'argv: {" ".join(self.argv[1:])}')
        except Exception as e:
            log.warning(f'mskit log file report start failed - {e}')
        return self

    def __exit__(self, exc_type, exc_val, exc_tb):
        try:
            end_time = datetime.datetime.now()
            log.debug(f"Run time: {end_time-self.start_time}")
            log.debug(f"End: {end_time}")
            log.debug(f"===== {self.random_invocation_name} =====")
        except Exception as e:
            log.warning(f'InvocationReporter.__exit__ internal exception - {e}')


def mskit_own_main(argv) -> int:
    """ Main mskit entry point. Reads command line options, runs the command and returns the exit code:
        0 pass, 1 fail or error, 2 usage error
    """
    argv = argv.copy()
    options = CommandLineOptions()
    command_names = read_command_line_options(options, argv[1:])
    initial_vars = {"__MSKIT_EXE_PATH__": get_path_to_mskit_app(),
                    "__CURR_WORKING_DIR__": os.getcwd(),
                    "__MSKIT_DATA_FOLDER__": get_data_folder(),
                    "__MSKIT_DEFAULTS_FOLDER__": "$(__MSKIT_DATA_FOLDER__)/defaults",
                    "__PYTHON_VERSION__": sys.version_info,
                    "__PLATFORM_NODE__": platform.node(),
                    "__COMMAND_NAMES__": command_names,
                    "__USER_DATA_DIR__": os.path.normpath(appdirs.user_data_dir("mskit")),
                    "__INVOCATION_RANDOM_ID__": ''.join(random.choice(string.ascii_lowercase) for _ in range(16)),
                    "__ARGV__": argv,
                    }

    instance = None
    try:
        if options.mode == "verify":
            from pymskit.mskitVerify import MskitVerify
            instance = MskitVerify(initial_vars)
        elif options.mode == "compute":
            from pymskit.mskitCompute import MskitCompute
            instance = MskitCompute(initial_vars)
        else:
            raise MskitUsageError(f"incomprehensible command line options:\n{options}")
        instance.init_from_cmd_line_options(options)
        exit_code = instance.do_command()
    except (MskitUsageError, UnknownTheorem) as ex:
        log.error(f"usage error: {ex}")
        exit_code = EXIT_USAGE
    except MskitException as ex:
        log.error(f"{ex.__class__.__name__}: {ex}")
        exit_code = EXIT_FAIL
    finally:
        # make sure instance's dispose functions are called
        if instance is not None:
            instance.close()
    return exit_code


def main(argv=None) -> int:
    argv = sys.argv if argv is None else argv
    with InvocationReporter(argv):
        return mskit_own_main(argv)
