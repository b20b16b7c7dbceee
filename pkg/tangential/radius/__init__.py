from .radius import *
