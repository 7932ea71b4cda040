#include "doe/spec_io.hpp"

#include <cctype>
#include <set>

#include "doe/errors.hpp"
#include "doe/expression.hpp"

namespace doe {

namespace {

const Json& require(const Json& obj, const char* key) {
  if (!obj.is_object()) throw MalformedDocument("expected an object holding '" + std::string(key) + "'");
  auto it = obj.find(key);
  if (it == obj.end()) throw MalformedDocument(std::string("missing key '") + key + "'");
  return *it;
}

std::string text_of(const Json& v, const std::string& where) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_integer()) return v.dump();
  throw MalformedDocument(where + ": expected a string");
}

Polynomial poly_at(const Json& v, const ContextPtr& ctx, const std::string& where) {
  return parse_poly(text_of(v, where), ctx);
}

FieldElement scalar_at(const Json& v, const ContextPtr& ctx, const std::string& where) {
  Polynomial p = poly_at(v, ctx, where);
  if (!p.is_constant()) throw NotScalar(where + " must be a field constant, got " + p.to_string());
  return p.constant_term();
}

FieldSpec field_from_json(const Json& f) {
  std::string kind = text_of(require(f, "kind"), "field.kind");
  if (kind == "Q") return FieldSpec::rationals();
  if (kind == "GF") {
    const Json& p = require(f, "p");
    if (!p.is_number_unsigned()) throw MalformedDocument("field.p must be a positive integer");
    return FieldSpec::prime(p.get<std::uint64_t>());
  }
  throw MalformedDocument("field.kind must be \"Q\" or \"GF\"");
}

bool identifier(const std::string& s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  for (char c : s) {
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
  }
  return true;
}

// Every key of `obj` must be a declared generator.
void check_keys(const Json& obj, const ContextPtr& ctx, const char* what) {
  if (!obj.is_object()) throw MalformedDocument(std::string(what) + " must be an object keyed by generator");
  for (const auto& [k, v] : obj.items()) {
    if (ctx->index_of(k) < 0) throw UnknownGenerator(k);
  }
}

}  // namespace

DoubleExtSpec spec_from_json(const Json& doc) {
  if (!doc.is_object()) throw MalformedDocument("spec document must be an object");
  FieldSpec field = field_from_json(require(doc, "field"));

  const Json& gens = require(doc, "generators");
  if (!gens.is_array()) throw MalformedDocument("generators must be an array");
  std::vector<std::string> names;
  std::set<std::string> seen;
  for (const auto& g : gens) {
    std::string name = text_of(g, "generators");
    if (!identifier(name)) throw MalformedDocument("bad generator name '" + name + "'");
    if (!seen.insert(name).second) throw MalformedDocument("duplicate generator '" + name + "'");
    names.push_back(name);
  }
  ContextPtr ctx = make_context(field, names);

  const Json& sigma = require(doc, "sigma");
  const Json& delta = require(doc, "delta");
  check_keys(sigma, ctx, "sigma");
  check_keys(delta, ctx, "delta");
  std::vector<Mat2> sig;
  std::vector<Col2> del;
  for (const auto& name : names) {
    const Json& m = require(sigma, name.c_str());
    std::string where = "sigma." + name;
    if (!m.is_array() || m.size() != 2 || !m[0].is_array() || !m[1].is_array() || m[0].size() != 2 ||
        m[1].size() != 2) {
      throw ArityError(where + " must be a 2x2 array");
    }
    sig.emplace_back(poly_at(m[0][0], ctx, where), poly_at(m[0][1], ctx, where),
                     poly_at(m[1][0], ctx, where), poly_at(m[1][1], ctx, where));
    const Json& d = require(delta, name.c_str());
    where = "delta." + name;
    if (!d.is_array() || d.size() != 2) throw ArityError(where + " must be an array of 2");
    del.emplace_back(poly_at(d[0], ctx, where), poly_at(d[1], ctx, where));
  }

  FieldElement p12 = scalar_at(require(doc, "p12"), ctx, "p12");
  FieldElement p11 = scalar_at(require(doc, "p11"), ctx, "p11");
  const Json& tau = require(doc, "tau");
  if (!tau.is_array() || tau.size() != 3) throw ArityError("tau must be an array of 3");
  return DoubleExtSpec(StructureMaps(ctx, std::move(sig), std::move(del)), p12, p11,
                       {poly_at(tau[0], ctx, "tau"), poly_at(tau[1], ctx, "tau"),
                        poly_at(tau[2], ctx, "tau")});
}

DoubleExtSpec parse_spec(std::string_view text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw MalformedDocument(std::string("not a JSON document: ") + e.what());
  }
  return spec_from_json(doc);
}

Json spec_to_json(const DoubleExtSpec& s) {
  const ContextPtr& ctx = s.context();
  Json doc;
  const FieldSpec& f = s.field();
  if (f.is_rationals()) {
    doc["field"] = {{"kind", "Q"}};
  } else {
    doc["field"] = {{"kind", "GF"}, {"p", f.modulus()}};
  }
  doc["generators"] = ctx->generators();
  Json sigma = Json::object();
  Json delta = Json::object();
  for (std::size_t g = 0; g < ctx->size(); ++g) {
    const Mat2& m = s.maps().sigma(g);
    const Col2& d = s.maps().delta(g);
    const std::string& name = ctx->generators()[g];
    sigma[name] = Json::array({Json::array({m(0, 0).to_string(), m(0, 1).to_string()}),
                               Json::array({m(1, 0).to_string(), m(1, 1).to_string()})});
    delta[name] = Json::array({d[0].to_string(), d[1].to_string()});
  }
  doc["sigma"] = sigma;
  doc["delta"] = delta;
  doc["p12"] = s.p12().to_string();
  doc["p11"] = s.p11().to_string();
  doc["tau"] = Json::array({s.tau(0).to_string(), s.tau(1).to_string(), s.tau(2).to_string()});
  return doc;
}

std::string render(const Json& doc) { return doc.dump(2) + "\n"; }

std::string emit_spec(const DoubleExtSpec& spec) { return render(spec_to_json(spec)); }

Json report_to_json(const ValidationReport& r) {
  Json doc;
  switch (r.status) {
    case ValidationReport::Status::Valid:
      doc["status"] = "valid";
      break;
    case ValidationReport::Status::Invalid:
      doc["status"] = "invalid";
      break;
    case ValidationReport::Status::Malformed:
      doc["status"] = "malformed";
      break;
  }
  doc["checks"] = r.checks;
  Json failures = Json::array();
  for (const auto& e : r.failures) {
    failures.push_back({{"check", e.check}, {"generator", e.generator}, {"residual", e.residual}});
  }
  doc["failures"] = failures;
  if (!r.message.empty()) doc["message"] = r.message;
  return doc;
}

std::string emit_report(const ValidationReport& r) { return render(report_to_json(r)); }

Json element_to_json(const ExtElement& e, const std::string& name1, const std::string& name2) {
  Json terms = Json::array();
  for (const auto& [ij, c] : e.terms()) {
    terms.push_back({{"i", ij.first}, {"j", ij.second}, {"coefficient", c.to_string()}});
  }
  return {{"element", e.to_string(name1, name2)}, {"terms", terms}};
}

Json presentation_to_json(const IteratedOrePresentation& p) {
  const ContextPtr& ctx = p.sigma1.context();
  const auto& names = ctx->generators();
  Json sigma1 = Json::object();
  Json d1 = Json::object();
  Json sigma2 = Json::object();
  Json d2 = Json::object();
  for (std::size_t g = 0; g < ctx->size(); ++g) {
    sigma1[names[g]] = p.sigma1.images()[g].to_string();
    d1[names[g]] = p.d1[g].to_string();
    sigma2[names[g]] = p.sigma2_on_A.images()[g].to_string();
    d2[names[g]] = p.d2_on_generator(g).to_string(p.inner, p.outer);
  }
  sigma2[p.inner] = p.sigma2_inner().to_string(p.inner, p.outer);
  d2[p.inner] = p.d2_inner().to_string(p.inner, p.outer);
  Json doc;
  doc["order"] = to_string(p.order);
  doc["inner"] = p.inner;
  doc["outer"] = p.outer;
  doc["sigma1"] = sigma1;
  doc["d1"] = d1;
  doc["sigma2"] = sigma2;
  doc["d2"] = d2;
  return doc;
}

Json detection_to_json(const Detection& d) {
  Json doc;
  doc["presentable"] = d.presentable();
  if (d.presentable()) {
    doc["presentation"] = presentation_to_json(*d.presentation);
  } else {
    doc["violations"] = d.violations;
  }
  return doc;
}

Json analysis_to_json(const ValidatedSpec& vs) {
  Json doc;
  doc["y1_first"] = detection_to_json(detect_y1_first(vs));
  doc["y2_first"] = detection_to_json(detect_y2_first(vs));

  Classification c = classify_double(vs);
  doc["classification"] = {{"kind", to_string(c.kind)}, {"reasons", c.reasons}};

  DirectionSet ds = diag_directions(vs.spec());
  Json dirs = Json::array();
  for (const auto& d : ds.directions) dirs.push_back(d.to_string());
  doc["directions"] = {{"all", ds.all}, {"list", dirs}};

  SearchResult sr = search_presentations(vs);
  Json found = Json::array();
  for (const auto& f : sr.found) {
    Json item;
    item["basis"] = f.basis.to_string();
    item["direction"] = f.direction.to_string();
    item["presentation"] = presentation_to_json(f.presentation);
    found.push_back(item);
  }
  doc["search"] = {{"family", sr.family}, {"presentations", found}};
  return doc;
}

}  // namespace doe
