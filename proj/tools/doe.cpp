#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "doe/analysis.hpp"
#include "doe/errors.hpp"
#include "doe/expression.hpp"
#include "doe/spec_io.hpp"

using namespace doe;

namespace {

constexpr int kValid = 0;
constexpr int kInvalid = 1;
constexpr int kMalformed = 2;

// Exit code carried through the verb handlers.
struct Exit {
  int code;
};

DoubleExtSpec load(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    std::cerr << "cannot read " << path << "\n";
    std::cout << emit_report(ValidationReport::malformed("cannot read " + path));
    throw Exit{kMalformed};
  }
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return parse_spec(buf.str());
  } catch (const Error& e) {
    std::cerr << path << ": " << e.what() << "\n";
    std::cout << emit_report(ValidationReport::malformed(e.what()));
    throw Exit{kMalformed};
  }
}

ValidatedSpec load_valid(const std::string& path) {
  ValidationReport report;
  auto vs = ValidatedSpec::try_validate(load(path), &report);
  if (!vs) {
    std::cerr << path << ": relations do not hold\n" << emit_report(report);
    throw Exit{kInvalid};
  }
  return *vs;
}

int cmd_validate(const std::string& path) {
  ValidationReport report = validate_all(load(path));
  std::cout << emit_report(report);
  return report.valid() ? kValid : kInvalid;
}

int cmd_nf(const std::string& path, const std::string& expr) {
  ValidatedSpec vs = load_valid(path);
  try {
    std::cout << parse_ext(vs, expr).to_string() << "\n";
  } catch (const Error& e) {
    std::cerr << "expression: " << e.what() << "\n";
    return kMalformed;
  }
  return kValid;
}

int cmd_analyze(const std::string& path) {
  std::cout << render(analysis_to_json(load_valid(path)));
  return kValid;
}

BasisChange parse_matrix(const std::string& text, const FieldSpec& f) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error&) {
    throw MalformedDocument("matrix must look like [[2,1],[0,1]]");
  }
  std::vector<std::vector<FieldElement>> rows;
  if (!doc.is_array()) throw ArityError("matrix must be a 2x2 array");
  for (const auto& r : doc) {
    if (!r.is_array()) throw ArityError("matrix must be a 2x2 array");
    std::vector<FieldElement> row;
    for (const auto& v : r) {
      row.push_back(parse_scalar(v.is_string() ? v.get<std::string>() : v.dump(), f));
    }
    rows.push_back(std::move(row));
  }
  return BasisChange::from_rows(f, rows);
}

int cmd_transform(const std::string& path, const std::string& name, const std::string& matrix) {
  ValidatedSpec vs = load_valid(path);
  if (name != "basis" && !matrix.empty()) {
    std::cerr << "--op " << name << " takes no matrix\n";
    return kMalformed;
  }
  std::optional<BasisChange> m;
  if (name == "basis") {
    if (matrix.empty()) {
      std::cerr << "--op basis needs a matrix\n";
      return kMalformed;
    }
    try {
      m = parse_matrix(matrix, vs.spec().field());
    } catch (const Error& e) {
      std::cerr << "matrix: " << e.what() << "\n";
      return kMalformed;
    }
  }
  try {
    std::optional<ValidatedSpec> out;
    if (name == "newp-a") {
      out = transform_newp_a(vs);
    } else if (name == "newp-b") {
      out = transform_newp_b(vs).spec;
    } else if (name == "swap") {
      out = swap_generators(vs);
    } else if (name == "gr") {
      out = associated_graded(vs);
    } else if (name == "canonical") {
      out = canonicalize_parameter(vs);
    } else {
      out = change_basis(vs, *m);
    }
    std::cout << emit_spec(out->spec());
  } catch (const ShapeError& e) {
    std::cerr << "ShapeError: " << e.what() << "\n";
    return kInvalid;
  } catch (const SingularBasis& e) {
    std::cerr << "SingularBasis: " << e.what() << "\n";
    return kInvalid;
  } catch (const PreconditionFailed& e) {
    std::cerr << "PreconditionFailed: " << e.what() << "\n";
    return kInvalid;
  }
  return kValid;
}

struct ExampleArgs {
  std::string name;
  std::string field = "Q";
  std::string a = "1", b = "1", c = "1";
  std::string q = "2";
  std::string p12 = "1", p11 = "0";
  std::string tau = "0,0,0";
  std::optional<std::string> generators;
};

std::vector<std::string> split_commas(const std::string& s) {
  std::vector<std::string> out;
  if (s.empty()) return out;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, ',')) out.push_back(item);
  return out;
}

int cmd_example(const ExampleArgs& args) {
  try {
    FieldSpec f = FieldSpec::parse(args.field);
    auto scalar = [&](const std::string& s) { return parse_scalar(s, f); };
    auto base = [&](const std::string& fallback) {
      return make_context(f, split_commas(args.generators.value_or(fallback)));
    };
    auto zero = FieldElement::zero(f);
    if (args.name == "b2") {
      std::cout << emit_spec(example_b2(scalar(args.a), scalar(args.b), scalar(args.c)).spec());
    } else if (args.name == "qplane") {
      std::cout << emit_spec(scalar_base_extension(scalar(args.q), zero, {zero, zero, zero}, base("x")).spec.spec());
    } else if (args.name == "jordan") {
      auto one = FieldElement::one(f);
      std::cout << emit_spec(scalar_base_extension(one, one, {zero, zero, zero}, base("")).spec.spec());
    } else {
      auto t = split_commas(args.tau);
      if (t.size() != 3) throw ArityError("--tau needs three comma-separated scalars");
      std::cout << emit_spec(scalar_base_extension(scalar(args.p12), scalar(args.p11),
                                                   {scalar(t[0]), scalar(t[1]), scalar(t[2])}, base(""))
                                 .spec.spec());
    }
  } catch (const Error& e) {
    std::cerr << "example " << args.name << ": " << e.what() << "\n";
    return kMalformed;
  }
  return kValid;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact workbench for right double Ore extensions"};
  app.require_subcommand(1);

  std::string path;
  auto* validate = app.add_subcommand("validate", "check structure maps, relations and overlaps");
  validate->add_option("spec", path, "spec document")->required();

  std::string expr;
  auto* nf = app.add_subcommand("nf", "normal form of a word or expression");
  nf->add_option("spec", path, "spec document")->required();
  nf->add_option("--expr", expr, "expression in the base generators, y1 and y2")->required();

  auto* analyze = app.add_subcommand("analyze", "iterated Ore detection, directions, presentation search");
  analyze->add_option("spec", path, "spec document")->required();

  std::string op;
  std::string matrix;
  auto* transform = app.add_subcommand("transform", "print a transformed spec");
  transform->add_option("spec", path, "spec document")->required();
  transform->add_option("basis-matrix", matrix, "basis change rows for --op basis, e.g. [[2,1],[0,1]]");
  transform->add_option("--op", op, "newp-a | newp-b | swap | gr | canonical | basis")
      ->required()
      ->check(CLI::IsMember({"newp-a", "newp-b", "swap", "gr", "canonical", "basis"}));
  transform->add_option("--matrix", matrix, "same as the positional matrix");

  ExampleArgs ex;
  auto* example = app.add_subcommand("example", "emit a ready-to-validate spec");
  example->add_option("name", ex.name, "b2 | qplane | jordan | scalar")
      ->required()
      ->check(CLI::IsMember({"b2", "qplane", "jordan", "scalar"}));
  example->add_option("--field", ex.field, "Q or GF:<p>");
  example->add_option("--a", ex.a);
  example->add_option("--b", ex.b);
  example->add_option("--c", ex.c);
  example->add_option("--q", ex.q);
  example->add_option("--p12", ex.p12);
  example->add_option("--p11", ex.p11);
  example->add_option("--tau", ex.tau, "t0,t1,t2");
  example->add_option("--generators", ex.generators, "comma-separated base generators");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kMalformed;
  }

  try {
    if (*validate) return cmd_validate(path);
    if (*nf) return cmd_nf(path, expr);
    if (*analyze) return cmd_analyze(path);
    if (*transform) return cmd_transform(path, op, matrix);
    return cmd_example(ex);
  } catch (const Exit& e) {
    return e.code;
  }
}
