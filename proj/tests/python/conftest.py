import os
import sys

# Under ctest, import the freshly built module rather than an editable install.
if os.environ.get("SPECHT_BUILD_PYTHON"):
    sys.meta_path[:] = [f for f in sys.meta_path if type(f).__name__ != "ScikitBuildRedirectingFinder"]
    sys.modules.pop("specht_coho", None)
