from lripct.callback.callback import Callback
from lripct.callback.diagnostics_callback import DIAGNOSTICS_COLUMNS, DiagnosticsCallback
from lripct.callback.metadata_callback import MetadataCallback

__all__ = ["Callback", "DiagnosticsCallback", "MetadataCallback", "DIAGNOSTICS_COLUMNS"]
