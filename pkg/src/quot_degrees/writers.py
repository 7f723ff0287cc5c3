import csv
import json
import sys
from fractions import Fraction
from typing import Callable, Optional, TextIO

from .records import TABLE_COLUMNS, OutputRecord, render_exact, row_to_csv

STDOUT = "-"


class ResultWriter:
    extension: str

    def __init__(self, output_path: Optional[str] = None):
        self.output_path = output_path or STDOUT

    def __call__(self, record: OutputRecord, options: dict):
        if self.output_path == STDOUT:
            self.write_result(record, sys.stdout, options)
            sys.stdout.flush()
            return

        with open(self.output_path, "w", encoding="utf-8", newline="") as f:
            self.write_result(record, f, options)

    def write_result(self, record: OutputRecord, file: TextIO, options: dict):
        raise NotImplementedError


class WriteTXT(ResultWriter):
    extension: str = "txt"

    def write_result(self, record: OutputRecord, file: TextIO, options: dict):
        print(f"{record.command}:", file=file)
        for name, value in record.params.items():
            print(f"  {name} = {value}", file=file)

        if record.rows is not None:
            print("\t".join(TABLE_COLUMNS), file=file)
            for row in record.rows:
                print("\t".join(row_to_csv(row)), file=file)
        for name, value in record.results.items():
            if isinstance(value, Fraction):
                print(f"{name}: {render_exact(value)}", file=file)
            else:
                print(f"{name}: {value:.3e}", file=file)

        for note in record.notes:
            print(f"note: {note}", file=file)
        for check in record.checks:
            detail = f" ({check.detail})" if check.detail else ""
            print(f"[{check.status}] {check.name}{detail}", file=file, flush=True)


class WriteCSV(ResultWriter):
    """
    Table rows as CSV: header row, LF line endings, exact rationals as
    "num/den" strings and integers bare. A record without rows is written as
    name,value pairs.
    """

    extension: str = "csv"

    def write_result(self, record: OutputRecord, file: TextIO, options: dict):
        writer = csv.writer(file, lineterminator="\n")
        if record.rows is not None:
            writer.writerow(TABLE_COLUMNS)
            for row in record.rows:
                writer.writerow(row_to_csv(row))
            return

        writer.writerow(["name", "value"])
        for name, value in record.results.items():
            writer.writerow(
                [name, render_exact(value) if isinstance(value, Fraction) else repr(value)]
            )


class WriteJSON(ResultWriter):
    extension: str = "json"

    def write_result(self, record: OutputRecord, file: TextIO, options: dict):
        pretty_json: bool = options.get("pretty_json", False)

        if pretty_json:
            json.dump(record.to_dict(), file, indent=4, ensure_ascii=False)
        else:
            json.dump(record.to_dict(), file)
        file.write("\n")


def get_writer(
    output_format: str, output_path: Optional[str] = None
) -> Callable[[OutputRecord, dict], None]:
    writers = {
        "txt": WriteTXT,
        "csv": WriteCSV,
        "json": WriteJSON,
    }

    return writers[output_format](output_path)
