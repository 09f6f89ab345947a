#!/usr/bin/env python3
# Copyright 2026 The coeval Authors
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

"""Writes the malformed-input corpus: two valid scenes, 17 broken scene
records, and three set/prediction records naming scenes that do not exist.
Each broken record carries its defect in its id; expected.txt lists them."""

import copy
import json
import math
from pathlib import Path

HERE = Path(__file__).parent
IDENTITY = [[1.0, 0.0, 0.0], [0.0, 1.0, 0.0], [0.0, 0.0, 1.0]]


def trajectory(offset=0.0):
    return {"waypoints": [[0.5 * (k + 1), offset] for k in range(50)], "dt": 0.1}


def box(x, y):
    return {"center": [x, y, 0.8], "size": [1.9, 1.5, 4.5], "yaw": 0.1, "agent_type": "vehicle"}


def segment(x0, x1, y):
    return {"start": [x0, y, 0.0], "end": [x1, y, 0.0], "segment_type": "lane_center"}


def scene(scene_id):
    return {
        "schema": 1,
        "id": scene_id,
        "frames": [{"boxes": [box(10.0, 4.0), box(-6.0, -5.0)],
                    "ego_pose": {"rotation": copy.deepcopy(IDENTITY), "translation": [0.0, 0.0, 0.0]}}],
        "road": [segment(-10.0, 10.0, 0.0), segment(10.0, 30.0, 0.0)],
        "conditions": {"weather": "no_rain", "timestamp_utc": 1700000000,
                       "geolocation": {"latitude": 37.4, "longitude": -122.1}, "utc_offset": -8.0},
        "ground_truth_future": trajectory(),
    }


def broken(name, mutate):
    s = scene(name)
    mutate(s)
    return s


def set_path(s, path, value):
    target = s
    for key in path[:-1]:
        target = target[key]
    target[path[-1]] = value


BROKEN = [
    ("cap_boxes_257", lambda s: set_path(s, ["frames", 0, "boxes"], [box(float(i), 5.0) for i in range(257)])),
    ("cap_road_4097", lambda s: set_path(s, ["road"], [segment(float(i), i + 1.0, 0.0) for i in range(4097)])),
    ("nan_box_center", lambda s: set_path(s, ["frames", 0, "boxes", 0, "center"], [None, 4.0, 0.8])),
    ("nan_translation", lambda s: set_path(s, ["frames", 0, "ego_pose", "translation"], [0.0, None, 0.0])),
    ("nan_ground_truth", lambda s: set_path(s, ["ground_truth_future", "waypoints", 7], [None, 0.0])),
    ("nan_road_end", lambda s: set_path(s, ["road", 1, "end"], [None, None, 0.0])),
    ("rotation_scaled", lambda s: set_path(s, ["frames", 0, "ego_pose", "rotation"],
                                           [[2.0, 0.0, 0.0], [0.0, 2.0, 0.0], [0.0, 0.0, 2.0]])),
    ("rotation_reflection", lambda s: set_path(s, ["frames", 0, "ego_pose", "rotation"],
                                               [[1.0, 0.0, 0.0], [0.0, 1.0, 0.0], [0.0, 0.0, -1.0]])),
    ("rotation_shear", lambda s: set_path(s, ["frames", 0, "ego_pose", "rotation"],
                                          [[1.0, 0.3, 0.0], [0.0, 1.0, 0.0], [0.0, 0.0, 1.0]])),
    ("rotation_wrong_shape", lambda s: set_path(s, ["frames", 0, "ego_pose", "rotation"],
                                                [[1.0, 0.0], [0.0, 1.0]])),
    ("box_negative_size", lambda s: set_path(s, ["frames", 0, "boxes", 1, "size"], [1.9, -1.5, 4.5])),
    ("latitude_out_of_range", lambda s: set_path(s, ["conditions", "geolocation", "latitude"], 95.0)),
    ("unknown_agent_type", lambda s: set_path(s, ["frames", 0, "boxes", 0, "agent_type"], "spaceship")),
    ("no_frames", lambda s: set_path(s, ["frames"], [])),
    ("degenerate_segment", lambda s: set_path(s, ["road", 0], segment(3.0, 3.0, 1.0))),
    ("unknown_weather", lambda s: set_path(s, ["conditions", "weather"], "snow")),
    ("missing_ground_truth", lambda s: s.pop("ground_truth_future")),
]


def write_jsonl(path, records):
    with open(path, "w") as f:
        for r in records:
            f.write(json.dumps(r, separators=(",", ":"), allow_nan=False) + "\n")


def main():
    scenes = [scene("valid_a")]
    scenes += [broken(name, mutate) for name, mutate in BROKEN]
    scenes.append(scene("valid_b"))
    write_jsonl(HERE / "scenes.jsonl", scenes)

    members = [trajectory(0.1 * i) for i in range(3)]
    write_jsonl(HERE / "sets.jsonl", [
        {"schema": 1, "scene_id": "valid_a", "source_label": "real", "trajectories": members},
        {"schema": 1, "scene_id": "ghost_set", "source_label": "real", "trajectories": members},
    ])
    write_jsonl(HERE / "predictions.jsonl", [
        {"schema": 1, "scene_id": "valid_a", "variant": "matched", "trajectories": [trajectory(0.2)]},
        {"schema": 1, "scene_id": "ghost_prediction_1", "variant": "matched", "trajectories": [trajectory()]},
        {"schema": 1, "scene_id": "valid_b", "variant": "matched", "trajectories": [trajectory(0.4)]},
        {"schema": 1, "scene_id": "ghost_prediction_2", "variant": "matched", "trajectories": [trajectory()]},
    ])
    names = [name for name, _ in BROKEN] + ["ghost_set", "ghost_prediction_1", "ghost_prediction_2"]
    assert len(names) == 20
    (HERE / "expected.txt").write_text("\n".join(names) + "\n")


if __name__ == "__main__":
    main()
