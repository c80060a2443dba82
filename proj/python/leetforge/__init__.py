"""Leetspeak replacement rules, candidate generation, MD5 matching and pattern detection."""

import json as _json

from ._core import (
    CharPair,
    Error,
    HashStore,
    ReplacementRule,
    RuleSet,
    WordList,
    __version__,
    apply_rule,
    audit,
    builtin_rules,
    corpus_stats,
    count_candidates,
    crack,
    deleet,
    digest_of,
    export_hashcat,
    generate,
    load_wordlists,
    parse_rules,
    run_benchmark_json,
    serialize_rules,
    uplift,
)


def run_benchmark(wordlist, hashes, rules, patterns_only=False, strict_multi=False, threads=0):
    """Baseline vs. pattern benchmark; returns the report as a dict."""
    return _json.loads(run_benchmark_json(wordlist, hashes, rules, patterns_only, strict_multi, threads))


__all__ = [
    "CharPair",
    "Error",
    "HashStore",
    "ReplacementRule",
    "RuleSet",
    "WordList",
    "apply_rule",
    "audit",
    "builtin_rules",
    "corpus_stats",
    "count_candidates",
    "crack",
    "deleet",
    "digest_of",
    "export_hashcat",
    "generate",
    "load_wordlists",
    "parse_rules",
    "run_benchmark",
    "serialize_rules",
    "uplift",
]
