// Copyright (c) 2026 The visync authors
// SPDX-License-Identifier: Apache-2.0

// Command-line front end. Talks to the library exclusively through the C
// interface in visync.h.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "visync.h"

namespace {

using ordered_json = nlohmann::ordered_json;

struct GlobalOpts {
  std::string format = "text";
  bool verbose = false;
  std::uint64_t budget = 0;  // 0 = library default
};

/// Field list printed either as `key value` lines or as one JSON object.
class Output {
 public:
  void add(const std::string& key, const std::string& value) { obj_[key] = value; }
  void add(const std::string& key, bool value) { obj_[key] = value; }
  void add(const std::string& key, unsigned long long value) { obj_[key] = value; }
  void add_stats(unsigned long long explored, unsigned long long rounds) {
    obj_["stats"] = ordered_json{{"explored", explored}, {"rounds", rounds}};
  }

  void print(const std::string& format) const {
    if (format == "json") {
      std::cout << obj_.dump() << "\n";
      return;
    }
    for (const auto& [key, value] : obj_.items()) {
      if (value.is_string()) {
        const std::string& s = value.get_ref<const std::string&>();
        std::cout << key << (s.empty() ? "" : " " + s) << "\n";
      } else if (value.is_boolean()) {
        std::cout << key << " " << (value.get<bool>() ? "yes" : "no") << "\n";
      } else if (value.is_object()) {
        std::cout << key;
        for (const auto& [k2, v2] : value.items())
          std::cout << " " << k2 << " " << v2.get<std::uint64_t>();
        std::cout << "\n";
      } else {
        std::cout << key << " " << value.get<std::uint64_t>() << "\n";
      }
    }
  }

 private:
  ordered_json obj_ = ordered_json::object();
};

int fail(int status, char* error) {
  std::cerr << "error: " << (error ? error : "unknown failure") << "\n";
  visync_free_string(error);
  return status == VISYNC_ERROR_BUDGET ? 3 : 2;
}

int read_file(const std::string& path, std::string* out) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    std::cerr << "error: cannot open '" << path << "'\n";
    return 2;
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  *out = buf.str();
  return 0;
}

/// Parses the file at `path`; on success stores the handle and returns 0.
int load_object(const std::string& path, visync_object** out) {
  std::string text;
  if (int rc = read_file(path, &text)) return rc;
  char* error = nullptr;
  int status = visync_parse_text(text.c_str(), out, &error);
  if (status != VISYNC_OK) return fail(status, error);
  return 0;
}

struct ObjectHandle {
  visync_object* obj = nullptr;
  ~ObjectHandle() { visync_object_free(obj); }
};

struct DecisionHandle {
  visync_decision* dec = nullptr;
  ~DecisionHandle() { visync_decision_free(dec); }
};

int model_code(const std::string& name) {
  if (name == "empty") return VISYNC_MODEL_EMPTY;
  if (name == "same") return VISYNC_MODEL_SAME;
  return VISYNC_MODEL_ARBITRARY;
}

void add_decision_fields(Output& out, const visync_decision* dec, bool verbose) {
  out.add("answer", std::string(visync_decision_answer(dec) ? "yes" : "no"));
  out.add("procedure", std::string(visync_decision_procedure(dec)));
  const char* witness = visync_decision_witness(dec);
  if (witness)
    out.add("witness", std::string(witness));
  else if (visync_decision_witness_overflow(dec))
    out.add("witness-length", visync_decision_witness_length(dec));
  if (verbose)
    out.add_stats(visync_decision_explored(dec), visync_decision_rounds(dec));
}

int run_check(const GlobalOpts& g, const std::string& model, long long turns,
              const std::string& file) {
  ObjectHandle h;
  if (int rc = load_object(file, &h.obj)) return rc;
  DecisionHandle d;
  char* error = nullptr;
  int status = visync_decide(h.obj, model_code(model), turns, g.budget, &d.dec, &error);
  if (status != VISYNC_OK) return fail(status, error);
  Output out;
  add_decision_fields(out, d.dec, g.verbose);
  out.print(g.format);
  return visync_decision_answer(d.dec) ? 0 : 1;
}

int run_classify(const GlobalOpts& g, const std::string& file) {
  ObjectHandle h;
  if (int rc = load_object(file, &h.obj)) return rc;
  Output out;
  char* error = nullptr;
  switch (visync_object_kind(h.obj)) {
    case VISYNC_KIND_DVPDA: {
      int vv = 0, counter = 0, has_call = 0, has_return = 0;
      int status = visync_classify(h.obj, &vv, &counter, &has_call, &has_return, &error);
      if (status != VISYNC_OK) return fail(status, error);
      out.add("kind", std::string("dvpda"));
      out.add("very-visibly", vv != 0);
      out.add("counter", counter != 0);
      out.add("has-call", has_call != 0);
      out.add("has-return", has_return != 0);
      break;
    }
    case VISYNC_KIND_DFA:
      out.add("kind", std::string("dfa"));
      break;
    default: {
      int visibly = 0, vv = 0;
      int status = visync_classify_vst(h.obj, &visibly, &vv, &error);
      if (status != VISYNC_OK) return fail(status, error);
      out.add("kind", std::string("vst"));
      out.add("visibly", visibly != 0);
      out.add("very-visibly", vv != 0);
      break;
    }
  }
  out.print(g.format);
  return 0;
}

int run_empty(const GlobalOpts& g, const std::string& mode, const std::string& file) {
  ObjectHandle h;
  if (int rc = load_object(file, &h.obj)) return rc;
  int is_empty = 0;
  char* witness = nullptr;
  unsigned long long witness_length = 0;
  char* error = nullptr;
  int status = visync_language_empty(
      h.obj, mode == "final" ? VISYNC_ACCEPT_FINAL : VISYNC_ACCEPT_FINAL_EMPTY,
      g.budget, &is_empty, &witness, &witness_length, &error);
  if (status != VISYNC_OK) return fail(status, error);
  Output out;
  out.add("empty", std::string(is_empty ? "yes" : "no"));
  if (!is_empty) {
    if (witness)
      out.add("witness", std::string(witness));
    else if (witness_length > 0)
      out.add("witness-length", witness_length);
  }
  visync_free_string(witness);
  out.print(g.format);
  return is_empty ? 0 : 1;
}

int run_oracle(const GlobalOpts& g, const std::string& model, long long turns,
               unsigned int max_len, const std::string& file) {
  ObjectHandle h;
  if (int rc = load_object(file, &h.obj)) return rc;
  int outcome = 0;
  char* witness = nullptr;
  char* error = nullptr;
  int status = visync_oracle(h.obj, model_code(model), turns, max_len, g.budget,
                             &outcome, &witness, &error);
  if (status != VISYNC_OK) return fail(status, error);
  Output out;
  const char* name = outcome == VISYNC_ORACLE_FOUND
                         ? "found"
                         : outcome == VISYNC_ORACLE_NONE_WITHIN ? "none-within"
                                                                : "budget-exceeded";
  out.add("outcome", std::string(name));
  if (witness) out.add("witness", std::string(witness));
  visync_free_string(witness);
  out.print(g.format);
  if (outcome == VISYNC_ORACLE_FOUND) return 0;
  return outcome == VISYNC_ORACLE_NONE_WITHIN ? 1 : 3;
}

int run_generate(const std::string& reduction, long long turns,
                 const std::string& in_file, const std::string& out_file) {
  ObjectHandle h;
  if (int rc = load_object(in_file, &h.obj)) return rc;
  ObjectHandle produced;
  char* error = nullptr;
  int status = visync_generate(h.obj, reduction.c_str(), turns, &produced.obj, &error);
  if (status != VISYNC_OK) return fail(status, error);
  char* text = nullptr;
  status = visync_serialize(produced.obj, &text, &error);
  if (status != VISYNC_OK) return fail(status, error);
  std::ofstream out(out_file, std::ios::binary);
  if (!out) {
    visync_free_string(text);
    std::cerr << "error: cannot write '" << out_file << "'\n";
    return 2;
  }
  out << text;
  visync_free_string(text);
  return 0;
}

int run_trace_sync(const GlobalOpts& g, const std::string& file) {
  ObjectHandle h;
  if (int rc = load_object(file, &h.obj)) return rc;
  DecisionHandle d;
  char* error = nullptr;
  int status = visync_trace_sync(h.obj, g.budget, &d.dec, &error);
  if (status != VISYNC_OK) return fail(status, error);
  Output out;
  add_decision_fields(out, d.dec, g.verbose);
  out.print(g.format);
  return visync_decision_answer(d.dec) ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Synchronization analysis for visibly stack automata"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOpts g;
  app.add_option("--format", g.format, "Output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  app.add_flag("--verbose", g.verbose, "Also print exploration statistics");
  app.add_option("--budget", g.budget,
                 "Exploration budget in states and summary pairs (0 = default)")
      ->envname("VISYNC_BUDGET");

  std::string model = "empty";
  long long turns = -1;
  std::string file, out_file, mode = "final", reduction;
  unsigned int max_len = 12;

  auto add_model = [&model](CLI::App* cmd) {
    cmd->add_option("--model", model, "Stack model")
        ->required()
        ->check(CLI::IsMember({"empty", "same", "arbitrary"}));
  };
  auto add_turns = [&turns](CLI::App* cmd) {
    cmd->add_option("--turns", turns, "Maximal number of stack-height turns")
        ->check(CLI::NonNegativeNumber);
  };

  CLI::App* check = app.add_subcommand(
      "check", "Decide whether a synchronizing word exists");
  add_model(check);
  add_turns(check);
  check->add_option("file", file, "Automaton file")->required();

  CLI::App* witness = app.add_subcommand(
      "witness", "Decide synchronizability and print a witness word");
  add_model(witness);
  add_turns(witness);
  witness->add_option("file", file, "Automaton file")->required();

  CLI::App* classify = app.add_subcommand("classify", "Report the object's class");
  classify->add_option("file", file, "Automaton or transducer file")->required();

  CLI::App* empty = app.add_subcommand(
      "empty", "Decide language emptiness (needs `initial`, uses `finals`)");
  empty->add_option("--mode", mode, "Acceptance mode")
      ->check(CLI::IsMember({"final", "final-empty"}))
      ->capture_default_str();
  empty->add_option("file", file, "Automaton file")->required();

  CLI::App* oracle = app.add_subcommand(
      "oracle", "Exhaustive search for a shortest synchronizing word");
  add_model(oracle);
  add_turns(oracle);
  oracle->add_option("--max-len", max_len, "Maximal word length")
      ->capture_default_str();
  oracle->add_option("file", file, "Automaton file")->required();

  CLI::App* generate = app.add_subcommand(
      "generate", "Build a hardness construction from a DFA with a subset");
  generate->add_option("--reduction", reduction, "Construction to apply")
      ->required()
      ->check(CLI::IsMember({"thm2", "thm3", "thm8", "thm10"}));
  add_turns(generate);
  generate->add_option("input", file, "DFA file with a `subset` line")->required();
  generate->add_option("output", out_file, "Destination automaton file")->required();

  CLI::App* trace = app.add_subcommand(
      "trace-sync", "Decide trace synchronizability of a transducer");
  trace->add_option("file", file, "Transducer file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  if (check->parsed() || witness->parsed()) return run_check(g, model, turns, file);
  if (classify->parsed()) return run_classify(g, file);
  if (empty->parsed()) return run_empty(g, mode, file);
  if (oracle->parsed()) return run_oracle(g, model, turns, max_len, file);
  if (generate->parsed()) return run_generate(reduction, turns, file, out_file);
  return run_trace_sync(g, file);
}
