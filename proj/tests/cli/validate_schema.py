import json
import pathlib
import sys

import jsonschema

schema = json.loads(pathlib.Path(sys.argv[1]).read_text())
jsonschema.Draft7Validator.check_schema(schema)
bad = 0
for path in sys.argv[2:]:
    for f in sorted(pathlib.Path(path).glob("*.json")):
        try:
            jsonschema.validate(json.loads(f.read_text()), schema)
        except jsonschema.ValidationError as e:
            bad += 1
            print(f"{f}: {e.message}")
sys.exit(1 if bad else 0)
