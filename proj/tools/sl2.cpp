// Command-line front end for the sl2real shared library. Exit codes:
// 0 success (and all-match for reproduce), 1 domain failure (invalid
// structure or embedding, table mismatch), 2 usage or parse error.

#include "sl2real/sl2real.h"

#include <cstdio>
#include <cstring>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

int usage(const char* msg = nullptr) {
  if (msg) std::fprintf(stderr, "error: %s\n", msg);
  std::fprintf(stderr,
               "usage:\n"
               "  sl2 group info <label>\n"
               "  sl2 h1 <split|compact> <label>\n"
               "  sl2 structure check <split|compact> <label> <twist>\n"
               "  sl2 diagram <label> [--ascii]\n"
               "  sl2 embedding check <file.json>\n"
               "  sl2 extend <split|compact> <label> <twist> <file.json>\n"
               "  sl2 reproduce <h1|extensions|structures|all> [--json]\n"
               "\n"
               "labels: An (n>=1), Dn (n>=4), E6, E7, E8\n"
               "twists: I2, -I2, e, f, d, omegaN, products like e*omega12,\n"
               "        or an inline 2x2 JSON matrix\n");
  return 2;
}

int fail(slr_status st) {
  std::fprintf(stderr, "error: %s: %s\n", slr_status_name(st), slr_last_error());
  switch (st) {
    case SLR_ERR_BAD_LABEL:
    case SLR_ERR_BAD_SIGMA:
    case SLR_ERR_BAD_MATRIX:
    case SLR_ERR_PARSE:
    case SLR_ERR_NULL_ARG:
      return 2;
    default:
      return 1;
  }
}

struct OwnedString {
  char* p = nullptr;
  ~OwnedString() { slr_string_free(p); }
};

struct OwnedGroup {
  slr_group* g = nullptr;
  ~OwnedGroup() { slr_group_free(g); }
};

struct OwnedEmbedding {
  slr_embedding* e = nullptr;
  ~OwnedEmbedding() { slr_embedding_free(e); }
};

bool read_file(const std::string& path, std::string& out) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return false;
  std::ostringstream ss;
  ss << in.rdbuf();
  out = ss.str();
  return true;
}

// crude but sufficient: the JSON schemas quote every interesting value
bool json_has(const std::string& json, const std::string& needle) {
  return json.find(needle) != std::string::npos;
}

int cmd_group_info(const std::string& label) {
  OwnedGroup g;
  slr_status st = slr_group_create(label.c_str(), &g.g);
  if (st != SLR_OK) return fail(st);
  OwnedString s;
  st = slr_group_info_json(g.g, &s.p);
  if (st != SLR_OK) return fail(st);
  std::puts(s.p);
  return 0;
}

int cmd_h1(const std::string& sigma, const std::string& label) {
  OwnedGroup g;
  slr_status st = slr_group_create(label.c_str(), &g.g);
  if (st != SLR_OK) return fail(st);
  OwnedString s;
  st = slr_h1_json(g.g, sigma.c_str(), &s.p);
  if (st != SLR_OK) return fail(st);
  std::puts(s.p);
  return 0;
}

int cmd_structure_check(const std::string& sigma, const std::string& label,
                        const std::string& twist) {
  OwnedGroup g;
  slr_status st = slr_group_create(label.c_str(), &g.g);
  if (st != SLR_OK) return fail(st);
  OwnedString s;
  st = slr_structure_check_json(g.g, sigma.c_str(), twist.c_str(), &s.p);
  if (st != SLR_OK) return fail(st);
  std::puts(s.p);
  return json_has(s.p, "\"valid\":true") || json_has(s.p, "\"valid\": true")
             ? 0
             : 1;
}

int cmd_diagram(const std::string& label, bool ascii) {
  OwnedGroup g;
  slr_status st = slr_group_create(label.c_str(), &g.g);
  if (st != SLR_OK) return fail(st);
  OwnedString s;
  st = ascii ? slr_diagram_ascii(g.g, &s.p) : slr_diagram_json(g.g, &s.p);
  if (st != SLR_OK) return fail(st);
  if (ascii)
    std::fputs(s.p, stdout);
  else
    std::puts(s.p);
  return 0;
}

int cmd_embedding_check(const std::string& path) {
  std::string text;
  if (!read_file(path, text)) return usage("cannot read embedding file");
  OwnedEmbedding e;
  slr_status st = slr_embedding_parse(text.c_str(), &e.e);
  if (st != SLR_OK) return fail(st);
  OwnedString s;
  st = slr_embedding_check_json(e.e, &s.p);
  if (st != SLR_OK) return fail(st);
  std::puts(s.p);
  return json_has(s.p, "\"valid\":true") || json_has(s.p, "\"valid\": true")
             ? 0
             : 1;
}

int cmd_extend(const std::string& sigma, const std::string& label,
               const std::string& twist, const std::string& path) {
  std::string text;
  if (!read_file(path, text)) return usage("cannot read embedding file");
  OwnedEmbedding e;
  slr_status st = slr_embedding_parse(text.c_str(), &e.e);
  if (st != SLR_OK) return fail(st);
  OwnedString file_label;
  slr_embedding_group_label(e.e, &file_label.p);
  if (label != file_label.p)
    return usage("label does not match the embedding file's group");
  OwnedString s;
  st = slr_extend_json(e.e, sigma.c_str(), twist.c_str(), &s.p);
  if (st != SLR_OK) return fail(st);
  std::puts(s.p);
  bool ok = (json_has(s.p, "\"structure_valid\":true") ||
             json_has(s.p, "\"structure_valid\": true")) &&
            (json_has(s.p, "\"embedding_valid\":true") ||
             json_has(s.p, "\"embedding_valid\": true"));
  return ok ? 0 : 1;
}

int cmd_reproduce(const std::string& which, bool as_json) {
  int all_match = 0;
  OwnedString s;
  slr_status st = slr_reproduce_json(which.c_str(), &all_match, &s.p);
  if (st != SLR_OK) {
    // unknown table name is a usage problem
    return st == SLR_ERR_DOMAIN ? usage(slr_last_error()) : fail(st);
  }
  if (as_json) {
    std::puts(s.p);
  } else {
    // modest human-readable rendering of the rows
    std::string text = s.p;
    size_t pos = 0;
    while ((pos = text.find("{\"computed\":", pos)) != std::string::npos) {
      auto grab = [&](const char* field) -> std::string {
        std::string pat = std::string("\"") + field + "\":";
        size_t at = text.find(pat, pos);
        if (at == std::string::npos) return "";
        at += pat.size();
        if (text[at] == '"') {
          size_t end = text.find('"', at + 1);
          return text.substr(at + 1, end - at - 1);
        }
        size_t end = text.find_first_of(",}", at);
        return text.substr(at, end - at);
      };
      std::string name = grab("name"), expected = grab("expected"),
                  computed = grab("computed"), match = grab("match");
      std::printf("%-28s expected: %-34s computed: %-34s %s\n", name.c_str(),
                  expected.c_str(), computed.c_str(),
                  match == "true" ? "ok" : "MISMATCH");
      pos += 12;
    }
    std::printf("all_match: %s\n", all_match ? "true" : "false");
  }
  return all_match ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  if (args.empty()) return usage();
  const std::string& cmd = args[0];

  if (cmd == "group") {
    if (args.size() == 3 && args[1] == "info") return cmd_group_info(args[2]);
    return usage();
  }
  if (cmd == "h1") {
    if (args.size() == 3) return cmd_h1(args[1], args[2]);
    return usage();
  }
  if (cmd == "structure") {
    if (args.size() == 5 && args[1] == "check")
      return cmd_structure_check(args[2], args[3], args[4]);
    return usage();
  }
  if (cmd == "diagram") {
    if (args.size() == 2) return cmd_diagram(args[1], false);
    if (args.size() == 3 && args[2] == "--ascii")
      return cmd_diagram(args[1], true);
    return usage();
  }
  if (cmd == "embedding") {
    if (args.size() == 3 && args[1] == "check")
      return cmd_embedding_check(args[2]);
    return usage();
  }
  if (cmd == "extend") {
    if (args.size() == 5) return cmd_extend(args[1], args[2], args[3], args[4]);
    return usage();
  }
  if (cmd == "reproduce") {
    if (args.size() == 2) return cmd_reproduce(args[1], false);
    if (args.size() == 3 && args[2] == "--json")
      return cmd_reproduce(args[1], true);
    return usage();
  }
  return usage();
}
