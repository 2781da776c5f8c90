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

from edrvfl.dataset import load_dataset
from edrvfl.hyperparams import HyperParams
from edrvfl.model_io import load_model, save_model
from edrvfl.network import depth_profile, predict, train
from edrvfl.stats import accuracy

csv_path = sys.argv[1]
label_column = sys.argv[2]

dataset = load_dataset(csv_path, label_column)
hp = HyperParams({'n': 100, 'l_max': 5, 'omega_r': 0.6, 'p': 0.3,
                  'seed': 1})

model, outputs = train(dataset, hp)
for layer, labels in enumerate(outputs.labels, 1):
    print('layer %d: %.4f' % (layer, accuracy(labels, dataset.y)))

# Accuracy of the ensemble made of the first l layers, for every l
print(depth_profile(model, dataset.features, dataset.y))

save_model(model, 'model.json')
labels, _ = predict(load_model('model.json'), dataset.features)
print(accuracy(labels, dataset.y))
