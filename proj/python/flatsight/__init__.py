# Copyright 2026 The flatsight Authors
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

"""Constant-angle billiards and isoptics of convex bodies."""

from ._core import (
    FlatsightError,
    Shape,
    angle_of_sight,
    antiperiodic_modes,
    beta_residual,
    build_shape,
    circle_fit,
    circle_orbit,
    classify,
    closure_steps,
    isoptic,
    outer_orbit,
    outer_period,
    rigid_residual,
    tangents,
)

__version__ = "0.1.0"

__all__ = [
    "FlatsightError",
    "Shape",
    "angle_of_sight",
    "antiperiodic_modes",
    "beta_residual",
    "build_shape",
    "circle_fit",
    "circle_orbit",
    "classify",
    "closure_steps",
    "isoptic",
    "outer_orbit",
    "outer_period",
    "rigid_residual",
    "tangents",
]
