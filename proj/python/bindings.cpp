#include <sstream>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "fibrous/cli.hpp"
#include "fibrous/functors.hpp"
#include "fibrous/json_io.hpp"
#include "fibrous/lazy_registry.hpp"

namespace py = pybind11;
using namespace fibrous;

// Documents cross the boundary as JSON text; the Python package decodes them.
namespace {

json parse(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(e.what());
  }
}

std::string check(const std::string& doc, bool verbose) {
  auto d = io::read_preorder(parse(doc));
  const SpatialWitness* w = d.w ? &*d.w : nullptr;
  return json(check_axioms(d.X, w, {verbose})).dump();
}

std::string from_top(const std::string& top) {
  auto g = functor_G_obj(io::read_topology(parse(top)));
  return io::write_preorder(g.X, &g.w).dump();
}

std::string to_top(const std::string& doc, const std::string& algorithm, std::size_t brute_limit) {
  auto d = io::read_preorder(parse(doc));
  if (!d.w) throw std::invalid_argument("to_top needs a spatial witness (fields s and m)");
  OpenSetAlgorithm alg;
  if (algorithm == "union-closure")
    alg = OpenSetAlgorithm::union_closure;
  else if (algorithm == "brute")
    alg = OpenSetAlgorithm::brute;
  else
    throw std::invalid_argument("unknown algorithm '" + algorithm + "'");
  return io::write_topology(functor_F_obj(d.X, *d.w, alg, brute_limit)).dump();
}

std::string equivalence(const std::string& x, const std::string& y) {
  auto w = find_equivalence(io::read_preorder(parse(x)).X, io::read_preorder(parse(y)).X);
  return w ? io::write_equivalence(*w).dump() : "null";
}

std::string umap(const std::string& x) {
  auto u = find_umap(io::read_preorder(parse(x)).X);
  return u ? io::write_umap(*u).dump() : "null";
}

std::string roundtrip_fg(const std::string& top) { return json(roundtrip_FG(io::read_topology(parse(top)))).dump(); }

std::string roundtrip_gf(const std::string& doc) {
  auto d = io::read_preorder(parse(doc));
  if (!d.w) throw std::invalid_argument("roundtrip_gf needs a spatial witness (fields s and m)");
  return io::write_equivalence(roundtrip_GF(d.X, *d.w)).dump();
}

std::string topologies(std::size_t n) {
  json out = json::array();
  for (const auto& t : enumerate_topologies(n)) out.push_back(io::write_topology(t));
  return out.dump();
}

std::string sample(const std::string& instance, std::size_t samples, std::uint64_t seed, bool verbose) {
  auto inst = lazy::make_instance(instance);
  py::gil_scoped_release release;
  return json(inst.check(samples, seed, verbose)).dump();
}

std::string modulus(const std::string& name, std::size_t samples, std::uint64_t seed) {
  auto c = lazy::make_modulus_case(name);
  py::gil_scoped_release release;
  return json(c.verify(samples, seed, false)).dump();
}

py::tuple run_cli(const std::vector<std::string>& args, const std::string& input) {
  std::ostringstream out, err;
  std::istringstream in(input);
  int code = cli::run(args, out, err, in);
  return py::make_tuple(code, out.str(), err.str());
}

}  // namespace

PYBIND11_MODULE(_fibrous, m) {
  m.doc() = "Fibrous preorders, finite topologies and neighbourhood oracles";
  py::register_exception<StructureError>(m, "StructureError", PyExc_ValueError);

  m.def("check", &check, py::arg("doc"), py::arg("verbose") = false);
  m.def("from_top", &from_top, py::arg("topology"));
  m.def("to_top", &to_top, py::arg("doc"), py::arg("algorithm") = "union-closure",
        py::arg("brute_limit") = kDefaultBruteLimit);
  m.def("equivalence", &equivalence, py::arg("x"), py::arg("y"));
  m.def("umap", &umap, py::arg("x"));
  m.def("roundtrip_fg", &roundtrip_fg, py::arg("topology"));
  m.def("roundtrip_gf", &roundtrip_gf, py::arg("doc"));
  m.def("topologies", &topologies, py::arg("n"));
  m.def("sample", &sample, py::arg("instance"), py::arg("samples") = 10000, py::arg("seed") = 0,
        py::arg("verbose") = false);
  m.def("modulus", &modulus, py::arg("case"), py::arg("samples") = 10000, py::arg("seed") = 0);
  m.def("standard_instances", &lazy::standard_instances);
  m.def("run_cli", &run_cli, py::arg("args"), py::arg("stdin") = "");
}
