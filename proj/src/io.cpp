#include "dfadec/io.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include "dfadec/errors.hpp"

namespace dfadec {

namespace {

using nlohmann::json;

void check_version(const json& doc, const char* what) {
  if (!doc.is_object()) throw ParseError(std::string(what) + ": expected a JSON object");
  if (doc.contains("version") && doc["version"] != kFormatVersion)
    throw ParseError(std::string(what) + ": unsupported version " + doc["version"].dump() +
                     " (expected \"v1\")");
}

Alphabet alphabet_from_json(const json& doc, const char* what) {
  if (!doc.contains("alphabet") || !doc["alphabet"].is_array())
    throw ParseError(std::string(what) + ": missing \"alphabet\" array");
  std::vector<std::string> labels;
  for (const auto& l : doc["alphabet"]) {
    if (!l.is_string()) throw ParseError(std::string(what) + ": alphabet labels must be strings");
    labels.push_back(l.get<std::string>());
  }
  return Alphabet(std::move(labels));
}

std::vector<Word> words_from_json(const json& arr, const Alphabet& alphabet,
                                  const char* what) {
  if (!arr.is_array()) throw ParseError(std::string(what) + ": expected an array of words");
  std::vector<Word> words;
  for (const auto& jw : arr) {
    if (!jw.is_array()) throw ParseError(std::string(what) + ": each word must be an array");
    Word w;
    for (const auto& js : jw) {
      if (!js.is_string())
        throw ParseError(std::string(what) + ": word symbols must be strings");
      w.push_back(alphabet.require(js.get<std::string>()));
    }
    words.push_back(std::move(w));
  }
  return words;
}

json words_to_json(const std::vector<Word>& words, const Alphabet& alphabet) {
  json arr = json::array();
  for (const Word& w : words) {
    json jw = json::array();
    for (Symbol a : w) jw.push_back(alphabet.label(a));
    arr.push_back(std::move(jw));
  }
  return arr;
}

json json_parse(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(e.what());  // nlohmann reports the byte position
  }
}

json dfa_core_to_json(const Dfa& dfa) {
  json doc;
  doc["num_states"] = dfa.num_states();
  doc["initial"] = dfa.initial();
  doc["accepting"] = dfa.accepting_states();
  json delta = json::array();
  for (State s = 0; s < dfa.num_states(); ++s) {
    json row = json::array();
    for (Symbol a = 0; a < dfa.alphabet().size(); ++a) row.push_back(dfa.next(s, a));
    delta.push_back(std::move(row));
  }
  doc["delta"] = std::move(delta);
  return doc;
}

Dfa dfa_core_from_json(const json& doc, const Alphabet& alphabet, const std::string& what) {
  for (const char* field : {"num_states", "initial", "accepting", "delta"})
    if (!doc.contains(field))
      throw ParseError(what + ": missing \"" + field + "\"");

  const auto num_states = doc["num_states"].get<State>();
  const auto initial = doc["initial"].get<State>();
  auto accepting = doc["accepting"].get<std::vector<State>>();

  const json& delta = doc["delta"];
  if (!delta.is_array() || delta.size() != num_states)
    throw ParseError(what + ": delta must have one row per state (" +
                     std::to_string(num_states) + " expected)");
  std::vector<State> transitions;
  transitions.reserve(static_cast<std::size_t>(num_states) * alphabet.size());
  for (State s = 0; s < num_states; ++s) {
    const json& row = delta[s];
    if (row.is_array() && row.size() > alphabet.size())
      throw ParseError(what + ": delta row for state " + std::to_string(s) +
                       " has more entries than the alphabet");
    for (Symbol a = 0; a < alphabet.size(); ++a) {
      if (!row.is_array() || a >= row.size())
        throw ParseError(what + ": missing delta entry for state " + std::to_string(s) +
                         " on symbol '" + alphabet.label(a) + "'");
      transitions.push_back(row[a].get<State>());
    }
  }
  try {
    return Dfa(alphabet, num_states, initial, std::move(accepting), std::move(transitions));
  } catch (const InputError& e) {
    throw ParseError(what + ": " + e.what());
  }
}

}  // namespace

json sample_to_json(const LabeledSample& sample) {
  json doc;
  doc["version"] = kFormatVersion;
  doc["alphabet"] = sample.alphabet().labels();
  doc["positives"] = words_to_json(sample.positives(), sample.alphabet());
  doc["negatives"] = words_to_json(sample.negatives(), sample.alphabet());
  return doc;
}

LabeledSample sample_from_json(const json& doc) {
  check_version(doc, "sample");
  Alphabet alphabet = alphabet_from_json(doc, "sample");
  if (!doc.contains("positives") || !doc.contains("negatives"))
    throw ParseError("sample: missing \"positives\" or \"negatives\"");
  auto positives = words_from_json(doc["positives"], alphabet, "sample positives");
  auto negatives = words_from_json(doc["negatives"], alphabet, "sample negatives");
  return LabeledSample(std::move(alphabet), std::move(positives), std::move(negatives));
}

LabeledSample read_abbadingo(std::istream& in) {
  std::size_t count = 0, alphabet_size = 0;
  if (!(in >> count >> alphabet_size))
    throw ParseError("abbadingo: malformed header (expected \"count alphabet_size\")");

  std::vector<std::string> labels;
  for (std::size_t i = 0; i < alphabet_size; ++i) labels.push_back(std::to_string(i));
  Alphabet alphabet(std::move(labels));

  std::vector<Word> positives, negatives;
  for (std::size_t e = 0; e < count; ++e) {
    int label = 0;
    std::size_t length = 0;
    if (!(in >> label >> length))
      throw ParseError("abbadingo: malformed example " + std::to_string(e + 1));
    if (label != 0 && label != 1)
      throw ParseError("abbadingo: label must be 0 or 1 in example " + std::to_string(e + 1));
    Word w(length);
    for (auto& a : w) {
      long sym = -1;
      if (!(in >> sym) || sym < 0 || static_cast<std::size_t>(sym) >= alphabet_size)
        throw ParseError("abbadingo: bad symbol in example " + std::to_string(e + 1));
      a = static_cast<Symbol>(sym);
    }
    (label == 1 ? positives : negatives).push_back(std::move(w));
  }
  return LabeledSample(std::move(alphabet), std::move(positives), std::move(negatives));
}

LabeledSample read_sample_text(const std::string& text) {
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    if (c == '{') return sample_from_json(json_parse(text));
    break;
  }
  std::istringstream in(text);
  return read_abbadingo(in);
}

LabeledSample read_sample_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open sample file: " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return read_sample_text(buf.str());
}

json dfa_to_json(const Dfa& dfa) {
  json doc = dfa_core_to_json(dfa);
  doc["version"] = kFormatVersion;
  doc["alphabet"] = dfa.alphabet().labels();
  return doc;
}

Dfa dfa_from_json(const json& doc) {
  check_version(doc, "dfa");
  Alphabet alphabet = alphabet_from_json(doc, "dfa");
  return dfa_core_from_json(doc, alphabet, "dfa");
}

json decomposition_to_json(const Decomposition& decomp) {
  json doc;
  doc["version"] = kFormatVersion;
  doc["alphabet"] = decomp.alphabet().labels();
  json members = json::array();
  for (const Dfa& d : decomp.members()) members.push_back(dfa_core_to_json(d));
  doc["dfas"] = std::move(members);
  return doc;
}

Decomposition decomposition_from_json(const json& doc) {
  check_version(doc, "decomposition");
  Alphabet alphabet = alphabet_from_json(doc, "decomposition");
  if (!doc.contains("dfas") || !doc["dfas"].is_array() || doc["dfas"].empty())
    throw ParseError("decomposition: missing non-empty \"dfas\" array");
  std::vector<Dfa> members;
  for (std::size_t k = 0; k < doc["dfas"].size(); ++k)
    members.push_back(
        dfa_core_from_json(doc["dfas"][k], alphabet, "dfa " + std::to_string(k)));
  try {
    return Decomposition(std::move(members));
  } catch (const InputError& e) {
    throw ParseError(std::string("decomposition: ") + e.what());
  }
}

Decomposition read_decomposition_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open decomposition file: " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return decomposition_from_json(json_parse(buf.str()));
}

json search_result_to_json(const SearchResult& result, std::uint32_t n) {
  json doc;
  doc["version"] = kFormatVersion;
  doc["n"] = n;
  doc["incomplete"] = !result.complete;
  if (!result.complete) doc["stop_reason"] = result.stop_reason;
  json frontier = json::array();
  for (const FrontierEntry& e : result.frontier) {
    json entry;
    entry["sizes"] = e.sizes;
    entry["decomposition"] = decomposition_to_json(e.witness);
    frontier.push_back(std::move(entry));
  }
  doc["frontier"] = std::move(frontier);
  return doc;
}

std::string to_dot(const Dfa& dfa, const std::string& name) {
  std::ostringstream out;
  out << "digraph " << name << " {\n";
  out << "  rankdir=LR;\n";
  out << "  __start [shape=point, style=invis];\n";
  for (State s = 0; s < dfa.num_states(); ++s)
    out << "  " << s << " [shape=" << (dfa.is_accepting(s) ? "doublecircle" : "circle")
        << "];\n";
  out << "  __start -> " << dfa.initial() << ";\n";
  for (State s = 0; s < dfa.num_states(); ++s) {
    // Merge parallel edges into one comma-separated label.
    std::map<State, std::string> edges;
    for (Symbol a = 0; a < dfa.alphabet().size(); ++a) {
      std::string& label = edges[dfa.next(s, a)];
      if (!label.empty()) label += ",";
      label += dfa.alphabet().label(a);
    }
    for (const auto& [target, label] : edges)
      out << "  " << s << " -> " << target << " [label=\"" << label << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace dfadec
