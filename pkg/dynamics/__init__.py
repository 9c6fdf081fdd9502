"""
Эталонная динамика: система пеленга, поднятая система и источники входов.
"""
from dynamics.bearing import (
    advance_truth, bearing_derivative, bearing_derivative_lifted, initial_truth,
    step_bearing_direct, step_truth,
)
from dynamics.inputs import InputSource, SinusoidInput, random_spec, sample_input
from dynamics.scene import SceneInput, scene_to_bearing, scene_to_vbar
