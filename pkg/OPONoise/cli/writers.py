import json
import sys
from datetime import datetime, timezone
from os.path import splitext
from typing import Any, Dict, Optional

import pandas

from OPONoise.__version__ import __version__
from OPONoise.errors import OutputError
from OPONoise.utils import define_separator, get_extension

FLOAT_FORMAT = "%.12g"


def write_frame(frame: pandas.DataFrame, out: Optional[str] = None) -> None:
    """Write a table as CSV, or TSV for a '.tsv' file.

    Args:
        frame (pandas.DataFrame): Table to write.
        out (Optional[str]): Output filename, stdout if None.
    """
    separator = "," if out is None else define_separator(out)
    try:
        frame.to_csv(sys.stdout if out is None else out, index=False, sep=separator,
                     float_format=FLOAT_FORMAT, lineterminator="\n")
    except OSError as error:
        raise OutputError(f"Cannot write {out}: {error.strerror or error}.") from error


def artifact_filename(out: str, name: str) -> str:
    """ `results.csv` and artifact `trace` give `results_trace.csv`. """
    extension = get_extension(out) or "csv"
    return f"{splitext(out)[0]}_{name}.{extension}"


def write_artifacts(artifacts: Dict[str, pandas.DataFrame], out: Optional[str] = None) -> Dict[str, str]:
    """Write the artifacts of one run.

    A single artifact goes to `out` itself. Several artifacts go to one file each
    next to `out`, or to stdout with a `# <name>` line before each table.

    Args:
        artifacts (Dict[str, pandas.DataFrame]): Tables by name.
        out (Optional[str]): Output filename, stdout if None.

    Returns:
        Dict[str, str]: Written filename per artifact, empty for stdout.
    """
    written = {}
    for name, frame in artifacts.items():
        if out is None:
            if len(artifacts) > 1:
                sys.stdout.write(f"# {name}\n")
            write_frame(frame)
            continue
        filename = out if len(artifacts) == 1 else artifact_filename(out, name)
        write_frame(frame, filename)
        written[name] = filename
    return written


def write_metadata(out: str, command: str, arguments: Dict[str, Any], config_path: Optional[str],
                   written: Dict[str, str]) -> str:
    """Record how a run was made in `<out>.meta.json`.

    Returns:
        str: Filename of the sidecar.
    """
    filename = f"{out}.meta.json"
    metadata = {
        "version": __version__,
        "command": command,
        "arguments": arguments,
        "config": config_path,
        "outputs": written,
        "created_utc": datetime.now(timezone.utc).isoformat(timespec="seconds"),
    }
    try:
        with open(filename, "w", encoding="utf-8") as stream:
            json.dump(metadata, stream, indent=2, sort_keys=True, default=str)
            stream.write("\n")
    except OSError as error:
        raise OutputError(f"Cannot write {filename}: {error.strerror or error}.") from error
    return filename
