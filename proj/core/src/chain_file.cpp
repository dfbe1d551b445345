#include "hurwitz/chain_file.hpp"

#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <functional>
#include <sstream>

namespace hurwitz {

namespace {

using nlohmann::json;

Rational rational_from_json(const json& value, const std::string& where) {
  if (value.is_number_integer()) return ratio(value.get<long>());
  if (value.is_string()) return parse_rational(value.get<std::string>());
  throw std::invalid_argument("chain file: " + where +
                              " must be an integer or a \"p/q\" string");
}

std::vector<Rational> rational_list(const json& value, const std::string& where) {
  if (!value.is_array())
    throw std::invalid_argument("chain file: " + where + " must be an array");
  std::vector<Rational> out;
  out.reserve(value.size());
  for (const auto& item : value) out.push_back(rational_from_json(item, where));
  return out;
}

}  // namespace

FileChainSource FileChainSource::load(const std::string& path) {
  std::ifstream in(path);
  if (!in)
    throw std::invalid_argument("chain file: cannot open '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse(buffer.str());
}

FileChainSource FileChainSource::parse(const std::string& json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& err) {
    throw std::invalid_argument(std::string("chain file: invalid JSON: ") + err.what());
  }
  if (!doc.is_object() || !doc.contains("entries") || !doc["entries"].is_array())
    throw std::invalid_argument("chain file: expected an object with an \"entries\" array");

  FileChainSource source;
  if (doc.contains("d")) source.d_ = doc["d"].get<int>();
  if (doc.contains("g")) source.g_ = doc["g"].get<int>();

  for (const auto& item : doc["entries"]) {
    if (!item.is_object() || !item.contains("j") || !item.contains("mu"))
      throw std::invalid_argument("chain file: every entry needs \"j\" and \"mu\"");
    Entry entry;
    entry.j = item["j"].get<int>();
    if (!item["mu"].is_array() || item["mu"].empty())
      throw std::invalid_argument("chain file: \"mu\" must be a nonempty array of parts");
    for (const auto& part : item["mu"]) entry.mu_parts.push_back(part.get<int>());
    std::sort(entry.mu_parts.begin(), entry.mu_parts.end(), std::greater<int>());

    if (item.contains("m")) entry.m = item["m"].get<int>();
    if (item.contains("c")) entry.c = item["c"].get<long>();
    if (item.contains("r")) entry.r = item["r"].get<long>();
    if (item.contains("dotP2")) entry.dot_p2 = item["dotP2"].get<long>();
    if (entry.c && (entry.r || entry.dot_p2))
      throw std::invalid_argument(
          "chain file: give either \"c\" or the pair \"r\"/\"dotP2\", not both");
    if (entry.r.has_value() != entry.dot_p2.has_value())
      throw std::invalid_argument("chain file: \"r\" and \"dotP2\" must come together");
    if (item.contains("n")) {
      const int n = item["n"].get<int>();
      if (n != static_cast<int>(entry.mu_parts.size()))
        throw std::invalid_argument(
            "chain file: \"n\" must equal the number of parts of mu");
    }
    if (item.contains("delta")) entry.delta = rational_list(item["delta"], "delta");
    if (item.contains("e")) entry.e = rational_list(item["e"], "e");

    const auto key = std::make_pair(entry.j, entry.mu_parts);
    if (source.entries_.count(key))
      throw std::invalid_argument("chain file: duplicate entry for j=" +
                                  std::to_string(entry.j));
    source.entries_.emplace(key, std::move(entry));
  }
  return source;
}

SourcedChainData FileChainSource::get(const CoverClass& cc,
                                      const StratumLabel& label) const {
  if ((d_ && *d_ != cc.d()) || (g_ && *g_ != cc.g()))
    throw std::invalid_argument("chain file: declared for (d,g)=(" +
                                std::to_string(d_.value_or(cc.d())) + "," +
                                std::to_string(g_.value_or(cc.g())) +
                                "), queried with (" + std::to_string(cc.d()) + "," +
                                std::to_string(cc.g()) + ")");

  // an entry may be written under j or under the mirror b-j
  const auto canonical = std::make_pair(label.j, label.mu.parts());
  const auto mirrored = std::make_pair(label.b - label.j, label.mu.parts());
  const auto it_canonical = entries_.find(canonical);
  const auto it_mirrored =
      mirrored == canonical ? entries_.end() : entries_.find(mirrored);
  if (it_canonical != entries_.end() && it_mirrored != entries_.end())
    throw std::invalid_argument("chain file: conflicting entries for " + label.key() +
                                " given under both j and b-j");
  const auto it = it_canonical != entries_.end() ? it_canonical : it_mirrored;
  if (it == entries_.end())
    throw MissingChainDataError("chain file: no entry for " + label.key());
  const Entry& entry = it->second;

  ChainData chain;
  std::string prov;
  chain.m = entry.m ? *entry.m : default_chain_length(label.mu);
  if (chain.m < 1)
    throw std::invalid_argument("chain file: m must be >= 1 for " + label.key());
  prov += entry.m ? "m=file" : "m=default";

  if (entry.c) {
    chain.c = *entry.c;
    prov += ",c=file";
  } else if (entry.r) {
    chain.c = chain_constant(cc.d(), label.mu.size(), *entry.r, *entry.dot_p2);
    prov += ",c=file";
  } else {
    chain.c = 0;
    prov += ",c=default";
  }

  if (entry.delta) {
    if (entry.delta->size() != static_cast<std::size_t>(chain.m) + 1)
      throw std::invalid_argument("chain file: delta for " + label.key() +
                                  " must have m+1 = " + std::to_string(chain.m + 1) +
                                  " entries");
    chain.delta = *entry.delta;
    prov += ",delta=file";
  } else {
    chain.delta.assign(chain.m + 1, Rational(0));
    prov += ",delta=default";
  }

  if (entry.e) {
    if (entry.e->size() != static_cast<std::size_t>(chain.m) + 1)
      throw std::invalid_argument("chain file: e for " + label.key() +
                                  " must have m+1 = " + std::to_string(chain.m + 1) +
                                  " entries");
    chain.e = *entry.e;
    prov += ",e=file";
  } else {
    chain.e = default_e(chain.m);
    prov += ",e=default";
  }

  return {std::move(chain), std::move(prov)};
}

}  // namespace hurwitz
