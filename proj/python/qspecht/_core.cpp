#include "qspecht/store.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace qs;

namespace {

// structured results travel as JSON text; the Python side decodes them
std::string classify_json(const std::vector<int>& parts, int ch) { return to_json(classify(Partition(parts), ch)).dump(); }

std::string mainhom_json(int s, int sp, int f, int g, bool cancellations) {
    MHParams p{s, sp, f, g};
    validate(p);
    Straightener st;
    json out = to_json(verify_mainhom(p, st));
    if (cancellations) out["cancellations"] = to_json(verify_paper_cancellations(p, st));
    return out.dump();
}

int homdim(const std::vector<int>& mu, const std::vector<int>& lam) {
    Straightener st;
    return ehom_specht_basis(Partition(mu), Partition(lam), st).dimension();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Reducibility of Specht modules for Hecke algebras at q = -1";
    m.def("partitions", [](int n) {
        std::vector<std::vector<int>> out;
        for_each_partition(n, [&](const Partition& p) { out.push_back(p.parts()); });
        return out;
    });
    m.def("conjugate", [](const std::vector<int>& p) { return conjugate(Partition(p)).parts(); });
    m.def("regularize", [](const std::vector<int>& p) { return regularize(Partition(p)).parts(); });
    m.def("is_doubly_singular", [](const std::vector<int>& p) { return is_doubly_singular(Partition(p)); });
    m.def("_classify", &classify_json, py::arg("partition"), py::arg("char") = 0);
    m.def("n_statistic", [](const std::vector<int>& lam, const std::vector<int>& mu) {
        return n_statistic(Partition(lam), Partition(mu));
    });
    m.def("homdim", &homdim, py::arg("mu"), py::arg("lam"), py::call_guard<py::gil_scoped_release>());
    m.def("_verify_mainhom", &mainhom_json, py::arg("s"), py::arg("sp"), py::arg("f"), py::arg("g"),
          py::arg("cancellations") = false, py::call_guard<py::gil_scoped_release>());
}
