from .bicentric import *
