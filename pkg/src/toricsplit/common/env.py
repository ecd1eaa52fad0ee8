import os

def is_set(variable_name: str) -> bool:
    variable_value: str = os.getenv(variable_name, 'false').lower().strip()
    return variable_value == 'true' or variable_value == '1'

def is_debug() -> bool:
    return is_set('TSP_DEBUG')

def get_int(variable_name: str, default: int) -> int:
    variable_value: str = os.getenv(variable_name, str(default)).strip()

    try:
        return int(variable_value)
    except ValueError:
        raise ValueError(f"Environment variable {variable_name} must be an integer, got {variable_value!r}!")

def max_workers() -> int:
    return max(1, get_int('TSP_MAX_WORKERS', 4))

def blowup_cap() -> int:
    return get_int('TSP_BLOWUP_CAP', 9)
