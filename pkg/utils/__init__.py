from .misc_utils import *
from .parallel_run import run_in_parallel, default_worker_count
from .log_utils import config_logger, setup_file_logging, setup_stream_hdlr, close_log_hdlrs, SameLevelFilter, PerLevelFormatter
