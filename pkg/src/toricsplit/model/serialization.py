from dataclasses import asdict
from dacite import Config, from_dict

# nested tuples arrive as lists from the text parsers
DACITE_CONFIG: Config = Config(cast=[tuple], strict=True)

def serialize(obj):
    return asdict(obj)

def deserialize(cls, data):
    return from_dict(cls, data, config=DACITE_CONFIG)
