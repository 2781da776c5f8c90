#!/usr/bin/env python
#!/usr/bin/env python
#
# Copyright 2026 The edrvfl Developers
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

import sys

from edrvfl.comparison import build_report, render_table
from edrvfl.dataset import load_manifest, load_manifest_entry
from edrvfl.evaluation import repeat_runs
from edrvfl.grid import coarse_grid
from edrvfl.variants import variant_factory

manifest = sys.argv[1]

grid = coarse_grid()
variants = [variant_factory(name) for name in ('edrvfl', 'wpedrvfl')]

results = []
for entry in load_manifest(manifest):
    dataset = load_manifest_entry(entry)
    for variant in variants:
        # Ten repetitions with seeds 0..9 on the same four folds
        results.append(repeat_runs(dataset, variant, grid, repetitions=10,
                                   base_seed=0, fold_seed=0, jobs=-1))

print(render_table(build_report(results)))
