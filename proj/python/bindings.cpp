#include <pybind11/pybind11.h>

PYBIND11_MODULE(treeproj, m) { m.doc() = "placeholder"; }
