"""
Rainbow and properly colored path searches.

.. code-block:: python

    from rainbowpath.paths import find_rainbow_path_exact, rainbow_k_connect

    cert = find_rainbow_path_exact(graph, 0, 5, max_len=9)
    if cert is not None:
        print(cert.format())
"""
from .certificates import (
    KConnectCertificate,
    PathCertificate,
    check_kconnect,
    check_path,
    kconnect_problems,
    path_problems,
)
from .colorcoding import find_rainbow_path_cc, trials_for_confidence
from .common import DEFAULT_MAX_LEN, DEFAULT_TRIALS, ENGINES, SearchOptions
from .connectivity import (
    RainbowConnectivityReport,
    exhaustive_k_connect,
    find_rainbow_path,
    is_rainbow_connected,
    rainbow_k_connect,
)
from .exact import enumerate_rainbow_paths, find_rainbow_path_exact
from .proper import (
    ProperConnectivityReport,
    find_proper_path,
    is_properly_connected,
    proper_connectivity_report,
)

__all__ = [
    "DEFAULT_MAX_LEN",
    "DEFAULT_TRIALS",
    "ENGINES",
    "KConnectCertificate",
    "PathCertificate",
    "ProperConnectivityReport",
    "RainbowConnectivityReport",
    "SearchOptions",
    "check_kconnect",
    "check_path",
    "enumerate_rainbow_paths",
    "exhaustive_k_connect",
    "find_proper_path",
    "find_rainbow_path",
    "find_rainbow_path_cc",
    "find_rainbow_path_exact",
    "is_properly_connected",
    "is_rainbow_connected",
    "kconnect_problems",
    "path_problems",
    "proper_connectivity_report",
    "rainbow_k_connect",
    "trials_for_confidence",
]
