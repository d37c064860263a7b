from .fixtures import *  # noqa
