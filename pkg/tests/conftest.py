import json
import time

import pytest

from fuzzymetrics import cli


@pytest.fixture(scope="session")
def verify_all_result(tmp_path_factory):
    """One full `verify-all --seed 42` run shared by the acceptance tests."""
    out = tmp_path_factory.mktemp("verify_all")
    json_path = out / "report.json"
    csv_path = out / "summary.csv"
    t0 = time.perf_counter()
    code = cli.main(
        [
            "verify-all",
            "--seed", "42",
            "--trials", "1000",
            "--h", "0.02",
            "--json", str(json_path),
            "--csv", str(csv_path),
        ]
    )
    elapsed = time.perf_counter() - t0
    combined = json.loads(json_path.read_text())
    return {
        "exit_code": code,
        "elapsed_s": elapsed,
        "combined": combined,
        "reports": {rep["theorem_id"]: rep for rep in combined["reports"]},
        "csv_path": csv_path,
        "json_path": json_path,
    }
