#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "btlab/json_io.hpp"
#include "btlab/parse.hpp"

namespace {

using namespace btlab;

struct Options {
  std::string field = "q";
  std::string ring = "z";
  int threshold = 1;
  unsigned long long seed = 1;
  std::string format = "text";
  std::string out;
  int samples = 20;
  int word_radius = 2;
  int gap_radius = 2;
};

Field parse_field(const std::string& s) {
  if (s == "q") return rationals();
  if (s.rfind("fp:", 0) == 0) {
    unsigned p = unsigned(std::stoul(s.substr(3)));
    if (p < 2) throw std::invalid_argument("--field: p must be a prime >= 2");
    return prime_field(p);
  }
  throw std::invalid_argument("--field must be q or fp:<p>");
}

RingSpec parse_ring(const Options& opt) {
  if (opt.ring == "z") {
    if (opt.field != "q")
      throw std::invalid_argument("--ring z requires --field q");
    return RingSpec::integers();
  }
  if (opt.ring == "fp") {
    Field f = parse_field(opt.field);
    if (!f.is_prime())
      throw std::invalid_argument("--ring fp requires --field fp:<p>");
    return RingSpec::prime(f.p);
  }
  throw std::invalid_argument("--ring must be z or fp");
}

Place parse_place(const std::string& s) {
  if (s == "zero") return Place::Zero;
  if (s == "infinity") return Place::Infinity;
  throw std::invalid_argument("--place must be zero or infinity");
}

void emit(const Options& opt, const std::string& text) {
  if (opt.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream os(opt.out);
  if (!os) throw std::invalid_argument("cannot open output file " + opt.out);
  os << text;
}

Json read_json_file(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw std::invalid_argument("cannot open input file " + path);
  return Json::parse(is);
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

int run(int argc, char** argv) {
  CLI::App app{"exact computations in a product of Bruhat-Tits trees"};
  app.require_subcommand(1);
  Options opt;
  app.add_option("--field", opt.field, "coefficient field: q or fp:<p>");
  app.add_option("--ring", opt.ring, "matrix-entry ring J: z or fp");
  app.add_option("--threshold", opt.threshold, "horoball threshold");
  app.add_option("--seed", opt.seed, "RNG seed");
  app.add_option("--format", opt.format, "output format: json, text or dot");
  app.add_option("--out", opt.out, "output path (default stdout)");
  app.add_option("--samples", opt.samples, "sample count for SAMPLED checks");
  app.add_option("--word-radius", opt.word_radius, "word-ball radius cap");
  app.add_option("--gap-radius", opt.gap_radius, "horoball-gap word radius");

  std::string expr, place_name_opt = "zero";
  auto* val = app.add_subcommand("val", "valuation of an expression");
  val->add_option("expr", expr)->required();
  val->add_option("--place", place_name_opt, "zero or infinity");

  std::string vertex_a, vertex_b;
  auto* dist = app.add_subcommand("dist", "tree distance between vertices");
  dist->add_option("vertexA", vertex_a, "vertex JSON")->required();
  dist->add_option("vertexB", vertex_b, "vertex JSON")->required();

  std::string matrix_json, vertex_json, chain_path;
  auto* act = app.add_subcommand("act", "apply a matrix to a vertex or chain");
  act->add_option("--matrix", matrix_json, "2x2 matrix JSON")->required();
  act->add_option("--vertex", vertex_json, "vertex JSON");
  act->add_option("--chain", chain_path, "chain JSON file");

  int n = 1;
  auto* phi_cmd = app.add_subcommand("phi", "evaluate the cochain phi_n");
  phi_cmd->add_option("-n,--index", n, "cochain index")->required();
  phi_cmd->add_option("chain", chain_path, "chain JSON file")->required();

  int pair_m = 0, pair_k = 1;
  auto* pairing =
      app.add_subcommand("pairing", "independence pairing matrix");
  pairing->add_option("-m,--base", pair_m, "even base index (default 0)");
  pairing->add_option("-k,--count", pair_k, "number of cocycles")->required();

  std::string tag = "all";
  auto* verify = app.add_subcommand("verify", "lemma certificates");
  verify->add_option("lemma", tag, "lemma tag or 'all'");

  int ball_radius = -1;
  auto* render = app.add_subcommand("render", "DOT output");
  render->add_option("--ball", ball_radius, "tree ball of this radius");
  render->add_option("--chain", chain_path, "chain JSON file");
  render->add_option("--place", place_name_opt, "zero or infinity");

  // Allow the global flags to appear after the subcommand name.
  for (CLI::App* sub : {val, dist, act, phi_cmd, pairing, verify, render})
    sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  Field f = parse_field(opt.field);

  if (app.got_subcommand(val)) {
    Valuation v = valuation(parse_rational_function(f, expr),
                            parse_place(place_name_opt));
    emit(opt, opt.format == "json" ? dump(Json{{"valuation", v.str()}})
                                   : v.str() + "\n");
    return 0;
  }
  if (app.got_subcommand(dist)) {
    TreeVertex a = vertex_from_json(f, Json::parse(vertex_a));
    TreeVertex b = vertex_from_json(f, Json::parse(vertex_b));
    int d = tree_distance(a, b);
    emit(opt, opt.format == "json" ? dump(Json{{"distance", d}})
                                   : std::to_string(d) + "\n");
    return 0;
  }
  if (app.got_subcommand(act)) {
    Matrix2 g = matrix_from_json(f, Json::parse(matrix_json));
    if (!vertex_json.empty()) {
      TreeVertex v = vertex_from_json(f, Json::parse(vertex_json));
      emit(opt, dump(vertex_to_json(tree_act(g, v))));
    } else if (!chain_path.empty()) {
      Chain c = chain_from_json(f, read_json_file(chain_path));
      emit(opt, dump(chain_to_json(act_chain(g, c))));
    } else {
      throw std::invalid_argument("act: provide --vertex or --chain");
    }
    return 0;
  }
  if (app.got_subcommand(phi_cmd)) {
    Chain c = chain_from_json(f, read_json_file(chain_path));
    Scalar value = phi(n, c);
    emit(opt, opt.format == "json" ? dump(Json{{"phi", value.str()}})
                                   : value.str() + "\n");
    return 0;
  }
  if (app.got_subcommand(pairing)) {
    if (pair_m < 0 || pair_m % 2 != 0)
      throw std::invalid_argument("pairing: base index must be even, >= 0");
    if (pair_k < 1)
      throw std::invalid_argument("pairing: count must be >= 1");
    RingSpec ring = parse_ring(opt);
    HoroballSpec h{opt.threshold};
    std::vector<int> indices;
    for (int i = 1; i <= pair_k; ++i) indices.push_back(pair_m + 2 * i);
    for (int idx : indices)
      if (opt.threshold > 2 * idx - 2)
        std::cerr << "warning: threshold " << opt.threshold
                  << " drops every diagonal cell for index " << idx << "\n";
    PairingReport rep = pairing_matrix(indices, ring, h);
    if (opt.format == "json") {
      emit(opt, dump(pairing_to_json(rep)));
    } else {
      std::ostringstream os;
      os << "indices:";
      for (int idx : rep.indices) os << " " << idx;
      os << "\n";
      for (const auto& row : rep.matrix) {
        for (const Scalar& s : row) os << s.str() << " ";
        os << "\n";
      }
      os << "triangular: " << (rep.triangular ? "yes" : "no")
         << "\nrank: " << rep.rank << "\n";
      emit(opt, os.str());
    }
    return rep.triangular && rep.rank == int(rep.indices.size()) ? 0 : 1;
  }
  if (app.got_subcommand(verify)) {
    VerifyConfig config;
    config.ring = parse_ring(opt);
    config.horoball.threshold = opt.threshold;
    config.seed = opt.seed;
    config.samples = opt.samples;
    config.word_radius = opt.word_radius;
    config.gap_radius = opt.gap_radius;
    std::vector<Certificate> certs;
    if (tag == "all") {
      certs = run_all(config);
    } else {
      certs.push_back(run_verify_tag(tag, config));
    }
    bool all_pass = true;
    if (opt.format == "json") {
      Json arr = Json::array();
      for (const Certificate& cert : certs) {
        arr.push_back(certificate_to_json(cert));
        all_pass = all_pass && cert.pass;
      }
      emit(opt, dump(arr));
    } else {
      std::ostringstream os;
      for (const Certificate& cert : certs) {
        os << cert.lemma << ": " << (cert.pass ? "PASS" : "FAIL") << "\n";
        all_pass = all_pass && cert.pass;
      }
      emit(opt, os.str());
    }
    return all_pass ? 0 : 1;
  }
  if (app.got_subcommand(render)) {
    if (ball_radius >= 0) {
      emit(opt, dot_ball(f, parse_place(place_name_opt), ball_radius));
    } else if (!chain_path.empty()) {
      Chain c = chain_from_json(f, read_json_file(chain_path));
      emit(opt, dot_chain(c, parse_place(place_name_opt)));
    } else {
      throw std::invalid_argument("render: provide --ball or --chain");
    }
    return 0;
  }
  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const Json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
