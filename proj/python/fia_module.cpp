#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "fia/generate.hpp"
#include "fia/io.hpp"

namespace py = pybind11;
using namespace fia;

namespace {

RingSpec ring_of(const std::string& selector)
{
    return RingSpec::parse(selector);
}

GenConfig make_cfg(const std::string& ring, int order, uint64_t seed, double sparsity,
                   uint64_t bound)
{
    GenConfig c;
    c.ring = ring_of(ring);
    c.order = order;
    c.seed = seed;
    c.sparsity = sparsity;
    c.coeff_bound = bound;
    return c;
}

}  // namespace

PYBIND11_MODULE(fialg, m)
{
    m.doc() = "Exact higher-derivation calculus on finitary incidence algebras";

    py::register_exception<Error>(m, "FiaError");

    py::class_<Poset, std::shared_ptr<Poset>>(m, "Poset")
        .def(py::init([](const std::vector<std::string>& elements,
                         const std::vector<std::pair<std::string, std::string>>& covers) {
                 return std::const_pointer_cast<Poset>(Poset::from_covers(elements, covers));
             }),
             py::arg("elements"), py::arg("covers"))
        .def_property_readonly("elements", &Poset::labels)
        .def("leq", py::overload_cast<const std::string&, const std::string&>(&Poset::leq,
                                                                              py::const_))
        .def("segments",
             [](const Poset& p) {
                 std::vector<std::pair<std::string, std::string>> out;
                 for (const auto& [x, y] : p.segments())
                     out.emplace_back(p.label(x), p.label(y));
                 return out;
             })
        .def("interval",
             [](const Poset& p, const std::string& x, const std::string& y) {
                 std::vector<std::string> out;
                 for (int z : p.interval(p.index(x), p.index(y)))
                     out.push_back(p.label(z));
                 return out;
             })
        .def("__len__", &Poset::size)
        .def("__repr__", [](const Poset& p) {
            return "Poset(" + std::to_string(p.size()) + " elements, " +
                   std::to_string(p.segment_count()) + " segments)";
        });

    py::class_<AlgElement>(m, "AlgElement")
        .def(py::init([](const PosetPtr& p, const std::string& ring,
                         const std::map<std::string, std::string>& coeffs) {
                 RingSpec spec = ring_of(ring);
                 AlgElement e(p, spec);
                 for (const auto& [key, val] : coeffs)
                     e.add_coeff(parse_segment_key(*p, key), RingElem::parse(spec, val));
                 return e;
             }),
             py::arg("poset"), py::arg("ring"), py::arg("coeffs"))
        .def("coeffs",
             [](const AlgElement& e) {
                 std::map<std::string, std::string> out;
                 for (const auto& [sid, v] : e.coeffs())
                     out[e.poset()->segment_label(sid)] = v.str();
                 return out;
             })
        .def("is_zero", &AlgElement::is_zero)
        .def("__add__", &AlgElement::operator+)
        .def("__sub__", py::overload_cast<const AlgElement&>(&AlgElement::operator-, py::const_))
        .def("__mul__", &AlgElement::operator*)
        .def("__neg__", py::overload_cast<>(&AlgElement::operator-, py::const_))
        .def("__eq__", &AlgElement::operator==)
        .def("__repr__", [](const AlgElement& e) { return e.str(); });

    m.def("delta", [](const PosetPtr& p, const std::string& ring) {
        return AlgElement::delta(p, ring_of(ring));
    });
    m.def("e_segment", [](const PosetPtr& p, const std::string& ring, const std::string& x,
                          const std::string& y) {
        return AlgElement::e_segment(p, ring_of(ring), p->index(x), p->index(y));
    });

    py::class_<HigherDerivation>(m, "HigherDerivation")
        .def_property_readonly("order", &HigherDerivation::order)
        .def("apply",
             [](const HigherDerivation& d, int n, const AlgElement& a) {
                 return d.component(n).apply(a);
             },
             py::arg("n"), py::arg("element"))
        .def("__eq__", &HigherDerivation::operator==)
        .def("to_json", [](const HigherDerivation& d) { return dump(hd_to_json(d)); });

    py::class_<TransitiveMap>(m, "TransitiveMap")
        .def_property_readonly("order", &TransitiveMap::order)
        .def("value",
             [](const TransitiveMap& s, int n, const std::string& x, const std::string& y) {
                 return s.value(n, s.poset()->segment_id(s.poset()->index(x), s.poset()->index(y)))
                     .str();
             })
        .def("__eq__", &TransitiveMap::operator==)
        .def("to_json", [](const TransitiveMap& s) { return dump(tm_to_json(s)); });

    py::class_<Decomposition>(m, "Decomposition")
        .def_property_readonly("rho",
                               [](const Decomposition& d) { return d.rho.rho; })
        .def_property_readonly("sigma", [](const Decomposition& d) { return d.sigma; })
        .def("to_json",
             [](const Decomposition& d) { return dump(decomposition_to_json(d, true)); });

    m.def("hd_from_json", [](const std::string& text, const PosetPtr& p, const std::string& ring) {
        return hd_from_json(Json::parse(text), p, ring_of(ring));
    });
    m.def("tm_from_json", [](const std::string& text, const PosetPtr& p, const std::string& ring) {
        return tm_from_json(Json::parse(text), p, ring_of(ring));
    });

    m.def("hd_identity", [](const PosetPtr& p, const std::string& ring, int order) {
        return hd_identity(p, ring_of(ring), order);
    });
    m.def("hd_check", [](const HigherDerivation& d) {
        auto rep = hd_check(d);
        std::vector<std::tuple<int, std::string, std::string>> vs;
        for (const auto& v : rep.violations)
            vs.emplace_back(v.n, d.poset()->segment_label(v.seg_a),
                            d.poset()->segment_label(v.seg_b));
        return py::make_tuple(rep.ok, vs);
    });
    m.def("hd_mul", &hd_mul);
    m.def("hd_inverse", &hd_inverse);
    m.def("hd_bracket", &hd_bracket, py::arg("r"), py::arg("k"), py::arg("order"));
    m.def("hd_inner", [](const std::vector<AlgElement>& rho) {
        if (rho.empty())
            throw Error("hd_inner needs at least one element");
        return hd_inner(InnerData{rho[0].poset(), rho[0].spec(), rho});
    });
    m.def("hd_annihilates_idempotents", &hd_annihilates_idempotents);

    m.def("tm_check", [](const TransitiveMap& s) {
        auto rep = tm_check(s);
        std::vector<std::tuple<int, std::string, std::string>> vs;
        for (const auto& v : rep.violations)
            vs.emplace_back(v.n, s.poset()->segment_label(v.seg), s.poset()->label(v.mid));
        return py::make_tuple(rep.ok, vs);
    });
    m.def("tm_tilde", &tm_tilde);
    m.def("tm_extract", &tm_extract);

    m.def("gen_hd",
          [](const PosetPtr& p, const std::string& ring, int order, uint64_t seed,
             double sparsity, uint64_t bound) {
              return gen_hd(make_cfg(ring, order, seed, sparsity, bound), p);
          },
          py::arg("poset"), py::arg("ring"), py::arg("order"), py::arg("seed"),
          py::arg("sparsity") = 0.5, py::arg("bound") = 5);
    m.def("gen_transitive",
          [](const PosetPtr& p, const std::string& ring, int order, uint64_t seed,
             double sparsity, uint64_t bound) {
              return gen_transitive(make_cfg(ring, order, seed, sparsity, bound), p);
          },
          py::arg("poset"), py::arg("ring"), py::arg("order"), py::arg("seed"),
          py::arg("sparsity") = 0.5, py::arg("bound") = 5);

    m.def("decompose", [](const HigherDerivation& d) { return decompose(d); });
    m.def("verify", [](const HigherDerivation& d, const Decomposition& dec) {
        auto res = verify(d, dec.rho, dec.sigma);
        return py::make_tuple(res.ok, res.n, res.seg);
    });
}
