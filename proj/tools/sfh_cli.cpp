// Command-line front end: enroll / verify template files, capability
// reports, and Monte Carlo simulation.
//
// Exit codes: 0 success or ACCEPT, 1 REJECT, 2 usage or data error.

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>

#include "sfh/channel.hpp"
#include "sfh/fuzzy.hpp"
#include "sfh/spec.hpp"

namespace {

constexpr int kExitAccept = 0;
constexpr int kExitReject = 1;
constexpr int kExitError = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw UsageError("cannot write '" + path + "'");
  out << content;
  if (!out) throw UsageError("write to '" + path + "' failed");
}

sfh::Elem parse_hex_symbol(const std::string& token, std::uint32_t p) {
  if (token.empty() || token.size() > 8) throw UsageError("bad symbol '" + token + "'");
  std::uint64_t v = 0;
  for (char c : token) {
    int d;
    if (c >= '0' && c <= '9') d = c - '0';
    else if (c >= 'a' && c <= 'f') d = c - 'a' + 10;
    else if (c >= 'A' && c <= 'F') d = c - 'A' + 10;
    else throw UsageError("malformed hex symbol '" + token + "'");
    v = v * 16 + static_cast<std::uint64_t>(d);
  }
  if (v >= p) throw UsageError("symbol '" + token + "' outside F_" + std::to_string(p));
  return static_cast<sfh::Elem>(v);
}

/// 1D words: whitespace-separated hex symbols. Arrays: one row per line.
sfh::Grid read_data(const std::string& path, const sfh::Construction& code) {
  const std::string text = read_file(path);
  const sfh::Shape shape = code.shape();
  const std::uint32_t p = code.characteristic();
  std::vector<sfh::Elem> cells;
  if (shape.rows == 1) {
    std::istringstream in(text);
    for (std::string tok; in >> tok;) cells.push_back(parse_hex_symbol(tok, p));
  } else {
    std::istringstream lines(text);
    std::size_t rows = 0;
    for (std::string line; std::getline(lines, line);) {
      std::istringstream in(line);
      std::size_t cols = 0;
      for (std::string tok; in >> tok; ++cols) cells.push_back(parse_hex_symbol(tok, p));
      if (cols == 0) continue;
      if (cols != shape.cols) {
        throw UsageError("row " + std::to_string(rows + 1) + " has " + std::to_string(cols) + " symbols, expected " +
                         std::to_string(shape.cols));
      }
      ++rows;
    }
  }
  if (cells.size() != shape.size()) {
    throw UsageError("data has " + std::to_string(cells.size()) + " symbols, code expects " +
                     std::to_string(shape.rows) + "x" + std::to_string(shape.cols));
  }
  return sfh::Grid(shape, std::move(cells));
}

void print_summary(const sfh::Construction& code, std::ostream& os) {
  os << "rate k'/n' = " << code.dimension() << '/' << code.length() << " = " << std::fixed << std::setprecision(4)
     << code.rate() << std::defaultfloat << '\n';
  for (const auto& line : code.capability_report()) os << "  " << line << '\n';
}

struct BurstModel {
  std::vector<sfh::Shape> bursts;
  std::size_t random = 0;
};

// "bursts=2x5,7;random=3": COUNTxLEN, LEN, or COUNTxROWSxCOLS entries.
BurstModel parse_model(const std::string& text, const sfh::Shape& shape) {
  BurstModel model;
  if (text.empty() || text == "none") return model;
  auto to_size = [](const std::string& s) -> std::size_t {
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos) {
      throw UsageError("bad number '" + s + "' in model");
    }
    return std::stoul(s);
  };
  std::istringstream clauses(text);
  for (std::string clause; std::getline(clauses, clause, ';');) {
    if (clause.empty()) continue;
    const auto eq = clause.find('=');
    if (eq == std::string::npos) throw UsageError("model clause '" + clause + "' lacks '='");
    const std::string key = clause.substr(0, eq), value = clause.substr(eq + 1);
    if (key == "random") {
      model.random = to_size(value);
    } else if (key == "bursts") {
      std::istringstream entries(value);
      for (std::string entry; std::getline(entries, entry, ',');) {
        std::vector<std::size_t> parts;
        std::istringstream fields(entry);
        for (std::string f; std::getline(fields, f, 'x');) parts.push_back(to_size(f));
        std::size_t count = 1;
        sfh::Shape dims;
        if (parts.size() == 1) {
          dims = {1, parts[0]};
        } else if (parts.size() == 2) {
          count = parts[0];
          dims = {1, parts[1]};
        } else if (parts.size() == 3) {
          count = parts[0];
          dims = {parts[1], parts[2]};
        } else {
          throw UsageError("bad burst entry '" + entry + "'");
        }
        if (dims.rows > shape.rows || dims.cols > shape.cols) {
          throw UsageError("burst '" + entry + "' does not fit the code shape");
        }
        for (std::size_t i = 0; i < count; ++i) model.bursts.push_back(dims);
      }
    } else {
      throw UsageError("unknown model key '" + key + "'");
    }
  }
  return model;
}

int cmd_enroll(const std::string& spec, const std::string& in, const std::string& out, const std::string& hash) {
  const auto code = sfh::parse_construction(spec);
  const sfh::Grid x = read_data(in, *code);
  const sfh::Template t = sfh::enroll(x, *code, hash);
  write_file(out, t.serialize());
  std::cout << "enrolled " << code->spec() << '\n';
  print_summary(*code, std::cout);
  std::cout << "template written to " << out << '\n';
  return kExitAccept;
}

int cmd_verify(const std::string& in, const std::string& template_path) {
  const sfh::Template t = sfh::Template::parse(read_file(template_path));
  const auto code = sfh::parse_construction(t.code_spec);
  const sfh::Grid y = read_data(in, *code);
  const auto result = sfh::verify(y, t);
  if (result.accepted()) {
    std::cout << "ACCEPT\n";
    return kExitAccept;
  }
  std::cout << "REJECT(" << sfh::status_name(result.status) << ")\n";
  return kExitReject;
}

int cmd_capability(const std::string& spec) {
  const auto code = sfh::parse_construction(spec);
  std::cout << code->spec() << '\n';
  print_summary(*code, std::cout);
  std::cout << "recommended for: " << code->recommendation() << '\n';
  return kExitAccept;
}

int cmd_info(const std::string& spec) {
  const auto code = sfh::parse_construction(spec);
  const auto orders = code->syndrome_orders();
  std::size_t bytes = 0;
  for (auto o : orders) bytes += sfh::symbol_width(o);
  std::cout << "code       " << code->spec() << '\n'
            << "field      F_" << code->characteristic() << '\n'
            << "shape      " << code->shape().rows << 'x' << code->shape().cols << '\n'
            << "length     " << code->length() << '\n'
            << "dimension  " << code->dimension() << '\n'
            << "rate       " << std::fixed << std::setprecision(4) << code->rate() << std::defaultfloat << '\n'
            << "syndrome   " << orders.size() << " components, " << bytes << " bytes\n";
  return kExitAccept;
}

int cmd_simulate(const std::string& spec, const std::string& model_text, std::size_t trials, std::uint64_t seed) {
  if (trials == 0) throw UsageError("--trials must be at least 1");
  const auto code = sfh::parse_construction(spec);
  const BurstModel model = parse_model(model_text, code->shape());
  const std::uint32_t p = code->characteristic();
  std::size_t accepted = 0, decode_failures = 0, hash_mismatches = 0, false_accepts = 0;
  std::uint64_t mults = 0;
  for (std::size_t trial = 0; trial < trials; ++trial) {
    auto rng = sfh::SplitMix64::for_trial(seed, trial);
    sfh::Grid x(code->shape().rows, code->shape().cols);
    for (auto& v : x.cells()) v = static_cast<sfh::Elem>(rng.below(p));
    const sfh::Template t = sfh::enroll(x, *code);
    const auto pattern = sfh::gen_mixed(rng, p, code->shape(), model.bursts, model.random);
    sfh::Grid y = x;
    for (std::size_t i = 0; i < y.size(); ++i) y[i] = (y[i] + pattern.cells[i]) % p;

    const auto diff = sfh::subtract(p, sfh::parse_syndrome(*code, t.syndrome), code->syndrome(y));
    sfh::reset_mul_count();
    (void)code->decode(diff);
    mults += sfh::mul_count();

    const auto result = sfh::verify(y, t, *code);
    switch (result.status) {
      case sfh::VerifyStatus::Accept:
        ++accepted;
        if (*result.recovered != x) ++false_accepts;
        break;
      case sfh::VerifyStatus::DecodeFailure: ++decode_failures; break;
      case sfh::VerifyStatus::HashMismatch: ++hash_mismatches; break;
    }
  }
  const auto rate = [&](std::size_t count) {
    std::ostringstream os;
    os << std::fixed << std::setprecision(4) << static_cast<double>(count) / static_cast<double>(trials) << " ("
       << count << '/' << trials << ')';
    return os.str();
  };
  std::cout << "code                " << code->spec() << '\n'
            << "model               " << (model_text.empty() ? "none" : model_text) << '\n'
            << "trials              " << trials << '\n'
            << "seed                " << seed << '\n'
            << "accept rate         " << rate(accepted) << '\n'
            << "decode-failure rate " << rate(decode_failures) << '\n'
            << "hash-mismatch rate  " << rate(hash_mismatches) << '\n'
            << "false accepts       " << false_accepts << '\n'
            << "mean decode mults   " << std::fixed << std::setprecision(1)
            << static_cast<double>(mults) / static_cast<double>(trials) << '\n';
  return kExitAccept;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Syndrome fuzzy hashing with burst-error-correcting codes"};
  app.require_subcommand(1);

  std::string code_spec, in_path, out_path, template_path, model, hash = "sha-256";
  std::uint64_t seed = 1;
  std::size_t trials = 1000;

  auto* enroll = app.add_subcommand("enroll", "Enroll a data file and write a template");
  enroll->add_option("--code", code_spec, "Construction spec string")->required();
  enroll->add_option("--in", in_path, "Data file (hex symbols)")->required();
  enroll->add_option("--out", out_path, "Template output path")->required();
  enroll->add_option("--hash", hash, "Hash algorithm (sha-256, sha-512)");

  auto* verify = app.add_subcommand("verify", "Verify a data file against a template");
  verify->add_option("--in", in_path, "Data file (hex symbols)")->required();
  verify->add_option("--template", template_path, "Template file")->required();

  auto* capability = app.add_subcommand("capability", "Print guaranteed correction capability");
  capability->add_option("--code", code_spec, "Construction spec string")->required();

  auto* simulate = app.add_subcommand("simulate", "Monte Carlo enroll/perturb/verify");
  simulate->add_option("--code", code_spec, "Construction spec string")->required();
  simulate->add_option("--model", model, "Error model, e.g. 'bursts=2x5;random=3'");
  simulate->add_option("--trials", trials, "Number of trials");
  simulate->add_option("--seed", seed, "RNG seed");

  auto* info = app.add_subcommand("info", "Describe a construction");
  info->add_option("--code", code_spec, "Construction spec string")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitError;
  }

  try {
    if (*enroll) return cmd_enroll(code_spec, in_path, out_path, hash);
    if (*verify) return cmd_verify(in_path, template_path);
    if (*capability) return cmd_capability(code_spec);
    if (*simulate) return cmd_simulate(code_spec, model, trials, seed);
    if (*info) return cmd_info(code_spec);
  } catch (const sfh::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitError;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitError;
  }
  return kExitError;
}
