import io
import json
import math

import pandas as pd


VERSION = "0.1.0"


def rows_to_frame(rows, columns=None):
    frame = pd.DataFrame(list(rows))
    if columns is not None:
        frame = frame.reindex(columns=columns)
    return frame


def frame_to_csv(frame):
    buf = io.StringIO()
    frame.to_csv(buf, index=False, float_format="%.10g", lineterminator="\n")
    return buf.getvalue()


def _jsonable(value):
    if isinstance(value, float) and not math.isfinite(value):
        return None
    if hasattr(value, "item"):
        return _jsonable(value.item())
    return value


def frame_to_json(frame, command, params):
    rows = [{key: _jsonable(val) for key, val in record.items()} for record in frame.to_dict(orient="records")]
    return json.dumps({"version": VERSION, "command": command, "params": params, "rows": rows},
                      indent=2, sort_keys=False) + "\n"


def emit(frame, fmt, command, params, out=None):
    text = frame_to_csv(frame) if fmt == "csv" else frame_to_json(frame, command, params)
    if out:
        with open(out, "w", newline="\n") as handle:
            handle.write(text)
    else:
        print(text, end="")
    return text
