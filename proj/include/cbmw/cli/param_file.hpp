#ifndef CBMW_CLI_PARAM_FILE_HPP_
#define CBMW_CLI_PARAM_FILE_HPP_

// JSON parameter files.  Scalars over Q or F_p are strings "n" or "n/d" (JSON
// integers are accepted too); elements of F_{2^k} are coefficient lists
// [c_0, c_1, ...] of 1, x, x^2, ...  Floating point is rejected everywhere.

#include <json.hpp>

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "../error.hpp"
#include "../field.hpp"
#include "../omega.hpp"
#include "../params.hpp"

namespace cbmw::cli {

  using nlohmann::json;

  struct ParamFile {
    enum class OmegaSource { from_u, prefix };

    ParamKind                              kind  = ParamKind::degenerate;
    Field                                  field = Field::rational();
    std::vector<FieldValue>                u;
    std::optional<FieldValue>              rho;
    std::optional<FieldValue>              q;
    OmegaSource                            source = OmegaSource::from_u;
    std::optional<std::size_t>             order;
    std::vector<FieldValue>                prefix;
    std::optional<std::vector<FieldValue>> closure;
    std::vector<FieldValue>                negative;
    std::optional<unsigned>                n;
    std::optional<unsigned>                d;

    //! The parameter set; a sequence generated from u has at least
    //! min_order + 1 terms (default order 2r + 8).
    ParamSet to_params(std::size_t min_order = 0) const {
      if (source == OmegaSource::prefix) {
        OmegaSeq w(field, prefix, closure, negative);
        if (kind == ParamKind::degenerate) {
          return ParamSet::degenerate(u, std::move(w));
        }
        return ParamSet::nondegenerate(u, *rho, *q, std::move(w));
      }
      std::size_t const N
          = std::max(order.value_or(default_omega_order(u.size())), min_order);
      if (kind == ParamKind::degenerate) {
        return ParamSet::degenerate(u, omega_from_u_degenerate(field, u, N));
      }
      return ParamSet::nondegenerate(
          u, *rho, *q, omega_from_u_nondegenerate(field, *rho, *q, u, N));
    }
  };

  namespace detail {

    [[noreturn]] inline void fail_at(std::string const& path, std::string const& what) {
      throw Error(ErrorCode::parse, "at " + (path.empty() ? "/" : path) + ": " + what);
    }

    inline json const& member(json const& j, std::string const& path,
                              char const* key) {
      if (!j.contains(key)) {
        fail_at(path, std::string("missing key \"") + key + "\"");
      }
      return j.at(key);
    }

    inline unsigned as_count(json const& j, std::string const& path) {
      if (!j.is_number_integer() || j.get<long long>() < 0) {
        fail_at(path, "expected a non-negative integer");
      }
      return j.get<unsigned>();
    }

    inline std::string line_column(std::string const& text, std::size_t byte) {
      std::size_t line = 1, col = 1;
      for (std::size_t i = 0; i + 1 < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
          ++line;
          col = 1;
        } else {
          ++col;
        }
      }
      return "line " + std::to_string(line) + ", column " + std::to_string(col);
    }

  }  // namespace detail

  //! "Q", "GF(p)", "GF(2^k)" (as printed by Field::name).
  inline Field parse_field_name(std::string const& s) {
    if (s == "Q") {
      return Field::rational();
    }
    try {
      if (s.rfind("GF(2^", 0) == 0 && s.back() == ')') {
        return Field::binary(static_cast<unsigned>(std::stoul(s.substr(5, s.size() - 6))));
      }
      if (s.rfind("GF(", 0) == 0 && s.back() == ')') {
        return Field::prime(std::stoull(s.substr(3, s.size() - 4)));
      }
    } catch (std::logic_error const&) {
      // fall through to the error below
    }
    throw Error(ErrorCode::parse, "unknown field '" + s + "' (use Q, GF(p) or GF(2^k))");
  }

  inline Field parse_field(json const& j, std::string const& path) {
    if (j.is_string()) {
      return parse_field_name(j.get<std::string>());
    }
    if (!j.is_object()) {
      detail::fail_at(path, "field must be a name or an object");
    }
    auto const& t = detail::member(j, path, "type");
    if (!t.is_string()) {
      detail::fail_at(path + "/type", "expected a string");
    }
    std::string const type = t.get<std::string>();
    try {
      if (type == "rational") {
        return Field::rational();
      }
      if (type == "prime") {
        return Field::prime(detail::as_count(detail::member(j, path, "p"), path + "/p"));
      }
      if (type == "binary") {
        return Field::binary(detail::as_count(detail::member(j, path, "k"), path + "/k"));
      }
    } catch (Error const& e) {
      if (e.code() == ErrorCode::parse) {
        throw;
      }
      detail::fail_at(path, e.what());
    }
    detail::fail_at(path + "/type", "unknown field type '" + type + "'");
  }

  inline json field_to_json(Field const& F) {
    switch (F.kind()) {
      case Field::Kind::rational: return {{"type", "rational"}};
      case Field::Kind::prime: return {{"type", "prime"}, {"p", F.characteristic()}};
      case Field::Kind::binary: return {{"type", "binary"}, {"k", F.degree()}};
    }
    return nullptr;
  }

  inline FieldValue parse_value(Field const& F, json const& j, std::string const& path) {
    if (j.is_number_float()) {
      detail::fail_at(path, "floating point is not accepted");
    }
    if (F.kind() == Field::Kind::binary) {
      if (!j.is_array() || j.size() > F.degree()) {
        detail::fail_at(path, "expected a list of at most " + std::to_string(F.degree())
                                  + " bits (coefficients of 1, x, ...)");
      }
      std::uint64_t r = 0;
      for (std::size_t i = 0; i < j.size(); ++i) {
        if (!j[i].is_number_integer() || (j[i] != 0 && j[i] != 1)) {
          detail::fail_at(path + "/" + std::to_string(i), "expected 0 or 1");
        }
        r |= static_cast<std::uint64_t>(j[i].get<int>()) << i;
      }
      return F.from_residue(r);
    }
    try {
      if (j.is_number_integer()) {
        return F.from_integer(mpz_class(j.dump()));
      }
      if (j.is_string()) {
        return F.parse(j.get<std::string>());
      }
    } catch (Error const& e) {
      detail::fail_at(path, e.what());
    }
    detail::fail_at(path, "expected a string \"n\" or \"n/d\"");
  }

  inline json value_to_json(FieldValue const& x) {
    if (x.field().kind() == Field::Kind::binary) {
      return x.coefficients();
    }
    return x.to_string();
  }

  inline std::vector<FieldValue> parse_values(Field const& F, json const& j,
                                              std::string const& path) {
    if (!j.is_array()) {
      detail::fail_at(path, "expected a list");
    }
    std::vector<FieldValue> out;
    for (std::size_t i = 0; i < j.size(); ++i) {
      out.push_back(parse_value(F, j[i], path + "/" + std::to_string(i)));
    }
    return out;
  }

  inline json values_to_json(std::vector<FieldValue> const& v) {
    json out = json::array();
    for (auto const& x : v) {
      out.push_back(value_to_json(x));
    }
    return out;
  }

  inline ParamFile param_file_from_json(json const& j) {
    if (!j.is_object()) {
      detail::fail_at("", "top level must be an object");
    }
    static char const* const known[] = {"kind", "field", "u", "rho", "q",
                                        "omega", "n", "d"};
    for (auto const& [key, val] : j.items()) {
      if (std::find_if(std::begin(known), std::end(known),
                       [&](char const* k) { return key == k; })
          == std::end(known)) {
        detail::fail_at("/" + key, "unknown key");
      }
    }
    ParamFile pf;
    auto const& kind = detail::member(j, "", "kind");
    if (kind == "degenerate") {
      pf.kind = ParamKind::degenerate;
    } else if (kind == "nondegenerate") {
      pf.kind = ParamKind::nondegenerate;
    } else {
      detail::fail_at("/kind", "expected \"degenerate\" or \"nondegenerate\"");
    }
    pf.field = parse_field(detail::member(j, "", "field"), "/field");
    pf.u     = parse_values(pf.field, detail::member(j, "", "u"), "/u");
    if (pf.kind == ParamKind::nondegenerate) {
      pf.rho = parse_value(pf.field, detail::member(j, "", "rho"), "/rho");
      pf.q   = parse_value(pf.field, detail::member(j, "", "q"), "/q");
    } else if (j.contains("rho") || j.contains("q")) {
      detail::fail_at(j.contains("rho") ? "/rho" : "/q",
                      "only nondegenerate parameters carry rho and q");
    }
    if (j.contains("omega")) {
      auto const& o = j.at("omega");
      if (!o.is_object()) {
        detail::fail_at("/omega", "expected an object");
      }
      auto const& src = detail::member(o, "/omega", "source");
      if (src == "from-u") {
        pf.source = ParamFile::OmegaSource::from_u;
        if (o.contains("order")) {
          pf.order = detail::as_count(o.at("order"), "/omega/order");
        }
      } else if (src == "prefix") {
        pf.source = ParamFile::OmegaSource::prefix;
        pf.prefix = parse_values(pf.field, detail::member(o, "/omega", "values"),
                                 "/omega/values");
        if (pf.prefix.empty()) {
          detail::fail_at("/omega/values", "at least w_0 is required");
        }
        if (o.contains("closure")) {
          pf.closure = parse_values(pf.field, o.at("closure"), "/omega/closure");
        }
        if (o.contains("negative")) {
          pf.negative = parse_values(pf.field, o.at("negative"), "/omega/negative");
        }
      } else {
        detail::fail_at("/omega/source", "expected \"from-u\" or \"prefix\"");
      }
    }
    if (j.contains("n")) {
      pf.n = detail::as_count(j.at("n"), "/n");
    }
    if (j.contains("d")) {
      pf.d = detail::as_count(j.at("d"), "/d");
    }
    return pf;
  }

  //! Parses the document and validates it into a ParamFile.  Syntax errors
  //! carry line and column, schema errors a JSON pointer.
  inline ParamFile parse_param_file(std::string const& text) {
    json j;
    try {
      j = json::parse(text);
    } catch (json::parse_error const& e) {
      std::string const msg = e.what();
      throw Error(ErrorCode::parse, detail::line_column(text, e.byte) + ": "
                                        + msg.substr(msg.rfind(": ") + 2));
    }
    return param_file_from_json(j);
  }

  inline json to_json(ParamFile const& pf) {
    json j;
    j["kind"]  = pf.kind == ParamKind::degenerate ? "degenerate" : "nondegenerate";
    j["field"] = field_to_json(pf.field);
    j["u"]     = values_to_json(pf.u);
    if (pf.rho) {
      j["rho"] = value_to_json(*pf.rho);
    }
    if (pf.q) {
      j["q"] = value_to_json(*pf.q);
    }
    json o;
    if (pf.source == ParamFile::OmegaSource::from_u) {
      o["source"] = "from-u";
      if (pf.order) {
        o["order"] = *pf.order;
      }
    } else {
      o["source"] = "prefix";
      o["values"] = values_to_json(pf.prefix);
      if (pf.closure) {
        o["closure"] = values_to_json(*pf.closure);
      }
      if (!pf.negative.empty()) {
        o["negative"] = values_to_json(pf.negative);
      }
    }
    j["omega"] = o;
    if (pf.n) {
      j["n"] = *pf.n;
    }
    if (pf.d) {
      j["d"] = *pf.d;
    }
    return j;
  }

  //! Explicit-prefix file for a parameter set.
  inline ParamFile param_file_from(ParamSet const& p) {
    ParamFile pf;
    pf.kind  = p.kind();
    pf.field = p.field();
    pf.u     = p.u();
    if (!p.is_degenerate()) {
      pf.rho = p.rho();
      pf.q   = p.q();
    }
    pf.source   = ParamFile::OmegaSource::prefix;
    pf.prefix   = p.omega().prefix();
    pf.closure  = p.omega().closure();
    pf.negative = p.omega().negative();
    return pf;
  }

}  // namespace cbmw::cli

#endif  // CBMW_CLI_PARAM_FILE_HPP_
