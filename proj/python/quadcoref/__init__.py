"""Counterfactual quadruple bias auditing for coreference models."""

import json
import os
from pathlib import Path

_data = Path(__file__).with_name("data")
if _data.is_dir() and not os.environ.get("QUADCOREF_DATA_DIR"):
    os.environ["QUADCOREF_DATA_DIR"] = str(_data)

from . import _quadcoref  # noqa: E402
from ._quadcoref import (  # noqa: E402,F401
    DataError,
    acc_diff,
    cda_text,
    delta_i,
    edge_weight,
    inconsistency_across,
    inconsistency_within,
    min_weight_full_matching,
    spearman,
)


def _loads(jsonl):
    return [json.loads(line) for line in jsonl.splitlines() if line.strip()]


def _dumps(records):
    return "".join(json.dumps(r) + "\n" for r in records)


def extract(corpus_dir, threads=1, data_dir=""):
    """Original instances found in a directory of .txt documents."""
    return _loads(_quadcoref.extract_jsonl(str(corpus_dir), threads, str(data_dir)))


def build_quadruples(instances, data_dir=""):
    """Returns (quadruples, diagnostics)."""
    out, diagnostics = _quadcoref.quadruples_jsonl(_dumps(instances), str(data_dir))
    return _loads(out), diagnostics


def aggregate(quadruples, annotations, seed=0):
    """Returns (dataset, stats)."""
    out, stats = _quadcoref.aggregate_jsonl(
        _dumps(quadruples), _dumps(annotations), seed)
    return _loads(out), stats


def predict_baseline(dataset):
    return _loads(_quadcoref.predict_baseline_jsonl(_dumps(dataset)))


def score(dataset, predictions):
    """Returns (scores, warnings)."""
    out, warnings = _quadcoref.score_jsonl(_dumps(dataset), _dumps(predictions))
    return _loads(out), warnings


def report(scores, resamples=10000, seed=0, alpha=0.01, threads=1):
    """Returns (report dict, formatted table)."""
    out, table = _quadcoref.report_json(
        _dumps(scores), resamples, seed, alpha, threads)
    return json.loads(out), table


def match_names(names_path="", alpha=12.0 / 11.0):
    """Pairs as (masculine, feminine) tuples plus the total weight."""
    pairs, total = [], 0.0
    for line in _quadcoref.match_names_tsv(str(names_path), alpha).splitlines():
        if line.startswith("# total_weight\t"):
            total = float(line.split("\t")[1])
        elif line and not line.startswith("#"):
            pairs.append(tuple(line.split("\t")))
    return pairs, total
