# Copyright © 2025-2026 Cognizant Technology Solutions Corp, www.cognizant.com.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
#
# END COPYRIGHT

from enum import Enum


class Verdict(str, Enum):
    """
    Three-state outcome of a sampled necessary-and-sufficient test.

    A finite battery can refute a property but not certify it; certification
    only comes from an exact argument such as the spectral theorem for normal tuples.
    """

    CERTIFIED = "certified"
    REFUTED = "refuted"
    PASSED_BATTERY = "passed_battery"
