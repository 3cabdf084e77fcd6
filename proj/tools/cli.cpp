#include "valleyless/cli.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <iomanip>
#include <stdexcept>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "valleyless/bijections.hpp"
#include "valleyless/counting.hpp"
#include "valleyless/generating_functions.hpp"
#include "valleyless/verify.hpp"

namespace vls::cli {

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  if (text.empty()) return out;
  std::size_t pos = 0;
  while (true) {
    const std::size_t comma = text.find(',', pos);
    const std::string item = text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    if (item.empty() || !std::all_of(item.begin(), item.end(), [](unsigned char c) { return std::isdigit(c); })) {
      throw std::invalid_argument("expected comma-separated nonnegative integers, got '" + text + "'");
    }
    try {
      out.push_back(std::stoi(item));
    } catch (const std::out_of_range&) {
      throw std::invalid_argument("integer out of range: '" + item + "'");
    }
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

std::vector<int> parse_permutation_arg(const std::string& text) {
  if (text.find(',') != std::string::npos || text.size() == 1) return parse_int_list(text);
  if (text.size() > 9) {
    throw std::invalid_argument("compact permutation form is only accepted for n <= 9; use commas");
  }
  std::vector<int> out;
  for (char c : text) {
    if (!std::isdigit(static_cast<unsigned char>(c))) throw std::invalid_argument("bad permutation '" + text + "'");
    out.push_back(c - '0');
  }
  return out;
}

namespace {

struct Outputs {
  std::ostream& out;
  bool json = false;
};

void print_count(const Outputs& o, const BigCount& c) {
  if (o.json) {
    o.out << nlohmann::json{{"count", to_decimal(c)}}.dump() << '\n';
  } else {
    o.out << to_decimal(c) << '\n';
  }
}

template <class Range>
void print_words(const Outputs& o, const Range& items, const std::function<std::span<const int>(const typename Range::value_type&)>& word) {
  if (o.json) {
    auto arr = nlohmann::json::array();
    for (const auto& it : items) {
      const auto w = word(it);
      arr.push_back(std::vector<int>(w.begin(), w.end()));
    }
    o.out << nlohmann::json{{"count", items.size()}, {"items", std::move(arr)}}.dump() << '\n';
    return;
  }
  for (const auto& it : items) o.out << format_word(word(it)) << '\n';
}

void print_series(const Outputs& o, const TruncatedSeries& s) {
  if (o.json) {
    o.out << to_json(s).dump() << '\n';
  } else {
    o.out << to_plain(s);
  }
}

std::string join(std::span<const int> v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(v[i]);
  }
  return s;
}

void print_list(const Outputs& o, const char* key, std::span<const int> v) {
  if (o.json) {
    o.out << nlohmann::json{{key, std::vector<int>(v.begin(), v.end())}}.dump() << '\n';
  } else {
    o.out << join(v) << '\n';
  }
}

void print_permutation(const Outputs& o, const Permutation& p) {
  if (o.json) {
    print_list(o, "permutation", p.word());
  } else {
    o.out << format_word(p.word()) << '\n';
  }
}

int print_report(const Outputs& o, const VerificationReport& r) {
  if (o.json) {
    o.out << r.to_json().dump() << '\n';
  } else {
    for (const auto& c : r.checks) {
      o.out << (c.passed ? "PASS " : "FAIL ") << c.name << " (" << std::fixed << std::setprecision(1)
            << c.elapsed_ms << " ms)";
      if (!c.passed) o.out << " counterexample: " << c.counterexample.dump();
      o.out << '\n';
    }
    o.out << (r.all_passed() ? "all checks passed" : "verification FAILED") << " (" << r.checks.size()
          << " checks)\n";
  }
  return r.all_passed() ? kExitOk : kExitVerificationFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Valleyless sequences and permutations by valley count"};
  app.name("vls");
  app.require_subcommand(1);
  app.fallthrough();

  bool json = false;
  app.add_flag("--json", json, "Emit JSON instead of plain text");

  int n = 0, k = 0, len = 0, max = 0, sum = -1, order = 0, x_order = 0, q_order = 0, y_order = 0, total = 0;
  int max_n = -1;
  std::string perm_text, comp_text, set_text;

  // Each leaf registers its action here; exactly one fires.
  std::function<int(const Outputs&)> action;

  auto* count = app.add_subcommand("count", "Exact counts")->require_subcommand(1);
  auto* count_perms = count->add_subcommand("perms", "Permutations of length N with exactly K valleys");
  count_perms->add_option("--n", n)->required();
  count_perms->add_option("--valleys", k)->required();
  count_perms->callback([&] { action = [&](const Outputs& o) { print_count(o, count_valley_perms(n, k)); return kExitOk; }; });

  auto* count_seqs = count->add_subcommand("seqs", "Valleyless sequences by length, maximum and optional sum");
  count_seqs->add_option("--len", len)->required();
  count_seqs->add_option("--max", max)->required();
  auto* sum_opt = count_seqs->add_option("--sum", sum);
  count_seqs->callback([&] {
    action = [&, sum_opt](const Outputs& o) {
      print_count(o, sum_opt->count() ? count_valleyless_npk(len, sum, max) : count_valleyless_nk(len, max));
      return kExitOk;
    };
  });

  auto* enumerate = app.add_subcommand("enum", "Enumerate objects, one per line")->require_subcommand(1);
  auto* enum_perms = enumerate->add_subcommand("perms", "Valleyless permutations, or those with K valleys");
  enum_perms->add_option("--n", n)->required();
  auto* valleys_opt = enum_perms->add_option("--valleys", k);
  enum_perms->callback([&] {
    action = [&, valleys_opt](const Outputs& o) {
      const auto perms = valleys_opt->count() ? generate_k_valley_permutations(n, k)
                                              : generate_valleyless_permutations(n);
      print_words(o, perms, [](const Permutation& p) { return p.word(); });
      return kExitOk;
    };
  });

  auto* enum_seqs = enumerate->add_subcommand("seqs", "Valleyless sequences of length N with maximum exactly K");
  enum_seqs->add_option("--len", len)->required();
  enum_seqs->add_option("--max", max)->required();
  enum_seqs->callback([&] {
    action = [&](const Outputs& o) {
      if (len < 1) throw std::invalid_argument("--len must be at least 1");
      print_words(o, valleyless_sequences(len, max), [](const Sequence& s) { return s.entries(); });
      return kExitOk;
    };
  });

  auto* gf = app.add_subcommand("gf", "Generating function expansions")->require_subcommand(1);
  auto* gf_valley = gf->add_subcommand("valley-perms", "g_K(x) truncated below x^M");
  gf_valley->add_option("--k", k)->required();
  gf_valley->add_option("--order", order)->required();
  gf_valley->callback([&] { action = [&](const Outputs& o) { print_series(o, gf_valley_perms(k, order)); return kExitOk; }; });

  auto* gf_vxy = gf->add_subcommand("vxy", "V(x,y) by length and maximum");
  gf_vxy->add_option("--x-order", x_order)->required();
  gf_vxy->add_option("--y-order", y_order)->required();
  gf_vxy->callback([&] {
    action = [&](const Outputs& o) {
      if (x_order < 1 || y_order < 1) throw std::invalid_argument("orders must be positive");
      print_series(o, gf_valleyless_bivariate(x_order, y_order));
      return kExitOk;
    };
  });

  auto* gf_vxqy = gf->add_subcommand("vxqy", "V(x,q,y) by length, sum and maximum");
  gf_vxqy->add_option("--x-order", x_order)->required();
  gf_vxqy->add_option("--q-order", q_order)->required();
  gf_vxqy->add_option("--y-order", y_order)->required();
  gf_vxqy->callback([&] {
    action = [&](const Outputs& o) {
      if (x_order < 1 || q_order < 1 || y_order < 1) throw std::invalid_argument("orders must be positive");
      print_series(o, v_xqy(Orders{x_order, q_order, y_order}));
      return kExitOk;
    };
  });

  auto* gf_an = gf->add_subcommand("an", "a_N(q,y) from the three-term recurrence");
  gf_an->add_option("--n", n)->required();
  gf_an->add_option("--q-order", q_order)->required();
  gf_an->add_option("--y-order", y_order)->required();
  gf_an->callback([&] {
    action = [&](const Outputs& o) {
      if (q_order < 1 || y_order < 1) throw std::invalid_argument("orders must be positive");
      print_series(o, a_n_recurrence(n, q_order, y_order));
      return kExitOk;
    };
  });

  auto* biject = app.add_subcommand("biject", "Bijections between permutations, compositions and subsets")
                     ->require_subcommand(1);
  auto* p2c = biject->add_subcommand("perm-to-comp", "Valleyless permutation to composition");
  p2c->add_option("--perm", perm_text)->required();
  p2c->callback([&] {
    action = [&](const Outputs& o) {
      const auto c = valleyless_perm_to_composition(Permutation(parse_permutation_arg(perm_text)));
      print_list(o, "composition", c.parts());
      return kExitOk;
    };
  });

  auto* c2p = biject->add_subcommand("comp-to-perm", "Composition to valleyless permutation");
  c2p->add_option("--comp", comp_text)->required();
  c2p->callback([&] {
    action = [&](const Outputs& o) {
      print_permutation(o, composition_to_valleyless_perm(Composition(parse_int_list(comp_text))));
      return kExitOk;
    };
  });

  auto* theta = biject->add_subcommand("theta", "Composition to its partial-sum subset");
  theta->add_option("--comp", comp_text)->required();
  theta->callback([&] {
    action = [&](const Outputs& o) {
      print_list(o, "set", theta_encode(Composition(parse_int_list(comp_text))));
      return kExitOk;
    };
  });

  auto* untheta = biject->add_subcommand("untheta", "Subset of 1..N-1 to composition of N");
  untheta->add_option("--set", set_text)->required();
  untheta->add_option("--total", total)->required();
  untheta->callback([&] {
    action = [&](const Outputs& o) {
      print_list(o, "composition", theta_decode(parse_int_list(set_text), total).parts());
      return kExitOk;
    };
  });

  auto* verify = app.add_subcommand("verify", "Run every cross-route identity against brute force");
  verify->add_option("--max-n", max_n, "Clamp every length-like range to N");
  verify->callback([&] {
    action = [&](const Outputs& o) {
      VerifyLimits limits = max_n >= 0 ? VerifyLimits::capped(max_n) : VerifyLimits{};
      limits.oracle = oracle::Config::from_env();
      limits.perm_n = std::min(limits.perm_n, limits.oracle.max_perm_n);
      limits.brute_count_n = std::min(limits.brute_count_n, limits.oracle.max_perm_n);
      return print_report(o, verify_all(limits));
    };
  });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help("", CLI::AppFormatMode::All);
    return kExitInvalidInput;
  }

  if (!action) {
    err << app.help();
    return kExitInvalidInput;
  }
  try {
    return action(Outputs{out, json});
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalidInput;
  }
}

}  // namespace vls::cli
