from .configVarStack import config_vars
from .configVarYamlReader import ConfigVarYamlReader
from .configVarDefaults import tolerance, int_var, int_list_var, bool_var, tolerance_names, ensure_defaults, read_defaults_file, defaults_folder
