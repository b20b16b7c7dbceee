from .tangents import *
