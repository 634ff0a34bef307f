#include "checker/json_io.hpp"

#include <string>

namespace checker::json_io {

namespace {

template <typename T>
T get_field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw SchemaError(std::string("missing field \"") + key + "\"");
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& e) {
    throw SchemaError(std::string("field \"") + key + "\" has the wrong type: " + e.what());
  }
}

}  // namespace

json to_json(const Permutation& p) { return {{"deg", p.degree()}, {"images", p.one_line()}}; }

Permutation permutation_from_json(const json& j, std::size_t degree) {
  if (j.is_string()) return Permutation::from_cycles(j.get<std::string>(), degree);
  if (j.is_array()) {
    std::vector<std::int64_t> images;
    for (const auto& v : j) {
      if (!v.is_number_integer()) throw SchemaError("permutation images must be integers");
      images.push_back(v.get<std::int64_t>());
    }
    return Permutation::from_one_line(images).padded(degree);
  }
  if (j.is_object()) {
    const auto images = get_field<std::vector<std::int64_t>>(j, "images");
    if (j.contains("deg") && get_field<std::size_t>(j, "deg") != images.size())
      throw SchemaError("\"deg\" does not match the number of images");
    return Permutation::from_one_line(images).padded(degree);
  }
  throw SchemaError("a permutation is an object, an image list, or a cycle string");
}

json to_json(const Triple& t) {
  return {{"n", t.n()},
          {"blue", t.blue().one_line()},
          {"red", t.red().one_line()},
          {"yellow", t.yellow().one_line()}};
}

Triple triple_from_json(const json& j) {
  if (!j.is_object()) throw SchemaError("a triple must be a JSON object");
  const std::size_t n = j.contains("n") ? get_field<std::size_t>(j, "n") : 0;
  for (const char* key : {"blue", "red", "yellow"})
    if (!j.contains(key)) throw SchemaError(std::string("missing field \"") + key + "\"");
  Permutation b = permutation_from_json(j.at("blue"), n);
  Permutation r = permutation_from_json(j.at("red"), n);
  Permutation y = permutation_from_json(j.at("yellow"), n);
  if (j.contains("n") && std::max({b.degree(), r.degree(), y.degree()}) > n)
    throw SchemaError("permutation degree exceeds \"n\"");
  return Triple(std::move(b), std::move(r), std::move(y), n);
}

json surface_report(const Triple& t) {
  json out = to_json(t);
  json comps = json::array(), chis = json::array(), genera = json::array(), verts = json::array();
  for (const ComponentSummary& s : summarize(t)) {
    json pts = json::array();
    for (Point x : s.points) pts.push_back(x + 1);
    comps.push_back(pts);
    chis.push_back(s.chi);
    genera.push_back(s.genus);
    json v;
    for (Color c : kColors) v[color_name(c)] = s.vertices.orders[static_cast<std::size_t>(c)];
    verts.push_back(v);
  }
  out["components"] = comps;
  out["chi"] = chis;
  out["genus"] = genera;
  out["vertices"] = verts;
  return out;
}

json to_json(const LabeledSurface& s) {
  json out = surface_report(s.triple());
  out["alpha"] = s.alpha();
  out["beta"] = s.beta();
  return out;
}

LabeledSurface labeled_from_json(const json& j, std::size_t alpha, std::size_t beta) {
  const Triple t = triple_from_json(j);
  if (j.contains("alpha")) alpha = get_field<std::size_t>(j, "alpha");
  if (j.contains("beta")) beta = get_field<std::size_t>(j, "beta");
  return canonical_form(t, alpha, beta);
}

json to_json(const CheckerSurface& s) {
  json out = surface_report(s.triple());
  out["automorphisms"] = s.automorphisms();
  out["double_triangles"] = s.double_triangle_count();
  return out;
}

json rational_json(const Rational& r) { return {{"exact", to_string(r)}, {"decimal", to_double(r)}}; }

json to_json(const IKElement& x) {
  json out = json::array();
  for (const auto& [p, c] : x.terms()) out.push_back({{"surface", to_json(p.triple())}, {"coefficient", to_string(c)}});
  return out;
}

IKElement ik_from_json(const json& j) {
  if (j.is_object()) return IKElement::basis(CheckerSurface(triple_from_json(j)));
  if (!j.is_array()) throw SchemaError("an IK element is a list of {surface, coefficient}");
  IKElement x;
  for (const auto& term : j) {
    if (!term.is_object() || !term.contains("surface"))
      throw SchemaError("IK term is missing \"surface\"");
    Rational c = 1;
    if (term.contains("coefficient")) {
      const auto& cj = term.at("coefficient");
      if (cj.is_string())
        c = parse_rational(cj.get<std::string>());
      else if (cj.is_number_integer())
        c = Rational(cj.get<long>());
      else
        throw SchemaError("coefficient must be an integer or an \"a/b\" string");
    }
    x.add(CheckerSurface(triple_from_json(term.at("surface"))), c);
  }
  return x;
}

json to_json(const Tensor3& t) {
  json re = json::array(), im = json::array();
  for (const auto& e : t.entries()) {
    re.push_back(e.real());
    im.push_back(e.imag());
  }
  return {{"dims", t.dims()}, {"re", re}, {"im", im}};
}

Tensor3 tensor_from_json(const json& j) {
  const auto dims = get_field<std::vector<std::size_t>>(j, "dims");
  if (dims.size() != 3) throw SchemaError("\"dims\" must have three entries");
  const auto re = get_field<std::vector<double>>(j, "re");
  std::vector<double> im(re.size(), 0.0);
  if (j.contains("im")) im = get_field<std::vector<double>>(j, "im");
  if (im.size() != re.size()) throw SchemaError("\"re\" and \"im\" differ in length");
  std::vector<Complex> entries;
  for (std::size_t i = 0; i < re.size(); ++i) entries.emplace_back(re[i], im[i]);
  return Tensor3({dims[0], dims[1], dims[2]}, std::move(entries));
}

json to_json(const Dessin& d) {
  auto one_based = [](const std::vector<std::vector<Point>>& vs) {
    json out = json::array();
    for (const auto& v : vs) {
      json cyc = json::array();
      for (Point e : v) cyc.push_back(e + 1);
      out.push_back(cyc);
    }
    return out;
  };
  json chis = json::array();
  for (const auto& comp : d.components()) chis.push_back(d.euler_characteristic(comp));
  return {{"edges", d.edge_count()},
          {"red_vertices", one_based(d.red_vertices)},
          {"yellow_vertices", one_based(d.yellow_vertices)},
          {"faces", one_based(d.faces())},
          {"chi", chis}};
}

json to_json(const GroupAlgebraElement& f) {
  json terms = json::array();
  for (const auto& [g, c] : f.terms())
    terms.push_back({{"element", to_json(g.padded(f.n()))}, {"coefficient", to_string(c)}});
  return {{"n", f.n()}, {"terms", terms}};
}

}  // namespace checker::json_io
