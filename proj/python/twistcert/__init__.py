# Copyright 2026 The twistcert Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Python bindings for the twistcert C++ core.

Field elements are plain integers in the canonical base-p encoding; a field
is named by its spec string ("7", "2^3", "3^2:1,0,2,1").
"""

import json

from ._core import (
    Code,
    __version__,
    code,
    generator,
    parity_check,
    power_sum,
    u_vector,
)
from . import _core

__all__ = [
    "Code",
    "__version__",
    "certify",
    "code",
    "conditions",
    "generator",
    "parity_check",
    "power_sum",
    "sweep",
    "u_vector",
    "verify_record",
]


def certify(family, field, alpha, k, t=1, h=0, eta=1, v=None, *, cap=1 << 24, oracle_limit=1_000_000,
            distance=True, oracle=True):
    """Run the certifier cascade on one instance and return its report record."""
    return json.loads(_core.certify_json(family, field, list(alpha), k, t, h, eta, None if v is None else list(v),
                                         cap, oracle_limit, distance, oracle))


def conditions(n, k, t, h, extended=False):
    """Which non-GRS parameter conditions hold for (n, k, t, h)."""
    return json.loads(_core.select_conditions(n, k, t, h, extended))


def sweep(config, jobs=None):
    """Run a sweep. Returns (header, records, footer)."""
    lines = [json.loads(line) for line in _core.sweep_json(json.dumps(config), jobs)]
    return lines[0], lines[1:-1], lines[-1]


def verify_record(record, config=None, oracle_limit=20_000_000):
    """Re-verify the certificate in a report record: (has_certificate, verified, detail)."""
    return _core.verify_record_json(json.dumps(record), None if config is None else json.dumps(config), oracle_limit)
