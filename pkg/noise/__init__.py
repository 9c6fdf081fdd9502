"""
Стохастические модели искажений входов и измерений.
"""
from noise.models import maybe_outlier, perturb_bearing, perturb_input, random_unit_vector
from noise.streams import STREAM_NAMES, RandomStreams
