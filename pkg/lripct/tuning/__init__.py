from lripct.tuning.search_space import tv_search_space
from lripct.tuning.sobol_design import SobolDesign
from lripct.tuning.tune import TUNING_COLUMNS, TuningResult, tune_tv

__all__ = ["tv_search_space", "SobolDesign", "tune_tv", "TuningResult", "TUNING_COLUMNS"]
