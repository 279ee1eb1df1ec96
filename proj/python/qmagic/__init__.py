# Copyright 2026 The qmagic Authors
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

"""Qudit stabilizer states, magic measures and toric-code anyons."""

from ._core import (
    PauliLabel,
    QmagicError,
    annulus_extreme_point_count,
    certify_product_lf,
    commutation_exponent,
    compose,
    cover,
    find_rephasing_pauli,
    log_base,
    magic_report,
    mi_witness_fires,
    mutual_information,
    parse_label,
    s_matrix,
    set_log_base,
)

__all__ = [
    "PauliLabel",
    "QmagicError",
    "annulus_extreme_point_count",
    "certify_product_lf",
    "commutation_exponent",
    "compose",
    "cover",
    "find_rephasing_pauli",
    "log_base",
    "magic_report",
    "mi_witness_fires",
    "mutual_information",
    "parse_label",
    "s_matrix",
    "set_log_base",
]
