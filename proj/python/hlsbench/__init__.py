"""Python bindings for the HLS evaluation harness core."""

from ._hlsbench import (
    BenchmarkTask,
    HlsbenchError,
    cache_key,
    dse_improved,
    expand_dse,
    extract_code,
    load_corpus,
    merge_ppa,
    mock_evaluate,
    pareto_frontier,
    parse_dse_spec,
    parse_hls_synth_report,
    parse_impl_report,
    pass_at_k,
    ppa_delta,
    render_authoring_prompt,
    render_codegen_prompt,
    render_directives,
    run_mock_benchmark,
    validate_task,
    __version__,
)

__all__ = [
    "BenchmarkTask",
    "HlsbenchError",
    "cache_key",
    "dse_improved",
    "expand_dse",
    "extract_code",
    "load_corpus",
    "merge_ppa",
    "mock_evaluate",
    "pareto_frontier",
    "parse_dse_spec",
    "parse_hls_synth_report",
    "parse_impl_report",
    "pass_at_k",
    "ppa_delta",
    "render_authoring_prompt",
    "render_codegen_prompt",
    "render_directives",
    "run_mock_benchmark",
    "validate_task",
    "__version__",
]
