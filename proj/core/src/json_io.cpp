#include "thl/json_io.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "thl/errors.hpp"

namespace thl {

namespace {

using nlohmann::json;

json parse_text(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(e.what(), int(e.byte));
  }
}

// Wraps the library's type errors (missing key, wrong kind) uniformly.
template <typename F>
auto checked(F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const json::exception& e) {
    throw ParseError(e.what(), 0);
  }
}

json element_doc(const GroupElement& g) {
  return json{{"plus", g.plus.text()}, {"minus", g.minus.text()}};
}

GroupElement element_of_doc(const json& doc) {
  return checked([&] {
    return GroupElement{Tree::parse(doc.at("plus").get<std::string>()),
                        Tree::parse(doc.at("minus").get<std::string>())};
  });
}

}  // namespace

std::string element_to_json(const GroupElement& g) {
  return element_doc(g).dump(2);
}

GroupElement element_from_json(const std::string& text) {
  return element_of_doc(parse_text(text));
}

std::string family_to_json(const std::vector<GroupElement>& family) {
  json list = json::array();
  for (const GroupElement& g : family) list.push_back(element_doc(g));
  return json{{"elements", std::move(list)}}.dump(2);
}

std::vector<GroupElement> family_from_json(const std::string& text) {
  const json doc = parse_text(text);
  return checked([&] {
    std::vector<GroupElement> out;
    for (const json& e : doc.at("elements")) out.push_back(element_of_doc(e));
    return out;
  });
}

std::string laurent_to_json(const LaurentPoly& p) {
  json terms = json::array();
  for (const auto& [key, coeff] : p.terms())
    terms.push_back(json{{"a", key.first}, {"z", key.second}, {"c", coeff.str()}});
  return json{{"terms", std::move(terms)}}.dump(2);
}

LaurentPoly laurent_from_json(const std::string& text) {
  const json doc = parse_text(text);
  return checked([&] {
    LaurentPoly p;
    for (const json& t : doc.at("terms")) {
      Coeff c;
      try {
        c = Coeff(t.at("c").get<std::string>());
      } catch (const std::runtime_error&) {
        throw ParseError("bad integer coefficient", 0);
      }
      p += LaurentPoly::monomial(c, t.at("a").get<int>(), t.at("z").get<int>());
    }
    return p;
  });
}

std::string tangle_to_json(const Tangle& t) {
  t.validate();
  const auto att = attachments(t);
  const auto arc_at = [&](const End& e) { return att.at(e).first; };

  json crossings = json::array();
  for (int c = 0; c < t.crossing_count(); ++c) {
    std::array<int, 4> ports{};
    for (int s = 0; s < 4; ++s) ports[size_t(s)] = arc_at(End::port(c, s));
    const bool a_over = t.crossings[size_t(c)].over02;
    json rec{{"id", c},
             {"ports", ports},
             {"over", a_over ? json::array({ports[0], ports[2]})
                             : json::array({ports[1], ports[3]})}};
    if (ports[0] == ports[1] && ports[2] == ports[3])
      rec["over_slots"] = a_over ? json::array({0, 2}) : json::array({1, 3});
    crossings.push_back(std::move(rec));
  }

  json orient = json::object();
  for (size_t a = 0; a < t.arcs.size(); ++a)
    orient[std::to_string(a)] = t.arcs[a].from < t.arcs[a].to ? 1 : -1;

  json bottom_edges = json::array(), top_edges = json::array();
  for (int i = 0; i < t.bottom.size(); ++i)
    bottom_edges.push_back(arc_at(End::at_bottom(i)));
  for (int i = 0; i < t.top.size(); ++i) top_edges.push_back(arc_at(End::at_top(i)));

  return json{{"crossings", std::move(crossings)},
              {"closures", json::array_t(size_t(t.free_loops), json(1))},
              {"orient", std::move(orient)},
              {"boundary",
               {{"bottom", t.bottom.text()},
                {"top", t.top.text()},
                {"bottom_edges", std::move(bottom_edges)},
                {"top_edges", std::move(top_edges)}}},
              {"oriented", t.oriented}}
      .dump(2);
}

Tangle tangle_from_json(const std::string& text) {
  const json doc = parse_text(text);
  return checked([&] {
    Tangle t;
    t.oriented = doc.at("oriented").get<bool>();
    t.free_loops = int(doc.at("closures").size());

    std::map<int, std::vector<End>> touch;
    const json& crossings = doc.at("crossings");
    for (size_t c = 0; c < crossings.size(); ++c) {
      const json& rec = crossings[c];
      if (rec.at("id").get<int>() != int(c))
        throw ParseError("crossing ids must be 0,1,... in order", 0);
      const json& ports = rec.at("ports");
      if (ports.size() != 4) throw ParseError("crossing needs four ports", 0);
      for (int s = 0; s < 4; ++s)
        touch[ports[size_t(s)].get<int>()].push_back(End::port(int(c), s));

      bool over02;
      if (rec.contains("over_slots")) {
        over02 = rec.at("over_slots").at(0).get<int>() == 0;
      } else {
        const json& over = rec.at("over");
        if (over.size() != 2) throw ParseError("over strand lists two arcs", 0);
        const int u = over.at(0).get<int>(), v = over.at(1).get<int>();
        if (u == ports[0].get<int>() && v == ports[2].get<int>())
          over02 = true;
        else if (u == ports[1].get<int>() && v == ports[3].get<int>())
          over02 = false;
        else
          throw ParseError("over strand does not match any port pair", 0);
      }
      t.crossings.push_back({over02});
    }

    const json& boundary = doc.at("boundary");
    t.bottom = SignSeq::parse(boundary.at("bottom").get<std::string>());
    t.top = SignSeq::parse(boundary.at("top").get<std::string>());
    const json& be = boundary.at("bottom_edges");
    const json& te = boundary.at("top_edges");
    if (int(be.size()) != t.bottom.size() || int(te.size()) != t.top.size())
      throw ParseError("boundary rows and edge lists disagree", 0);
    for (size_t i = 0; i < be.size(); ++i)
      touch[be[i].get<int>()].push_back(End::at_bottom(int(i)));
    for (size_t i = 0; i < te.size(); ++i)
      touch[te[i].get<int>()].push_back(End::at_top(int(i)));

    const json& orient = doc.at("orient");
    t.arcs.resize(touch.size());
    for (const auto& [arc_id, ends] : touch) {
      if (arc_id < 0 || arc_id >= int(touch.size()))
        throw ParseError("arc ids must be 0,1,... with no gaps", 0);
      if (ends.size() != 2) throw ParseError("every arc needs two ends", 0);
      End lo = std::min(ends[0], ends[1]), hi = std::max(ends[0], ends[1]);
      const int flow = orient.at(std::to_string(arc_id)).get<int>();
      t.arcs[size_t(arc_id)] = flow > 0 ? Arc{lo, hi} : Arc{hi, lo};
    }

    t.validate();
    return t;
  });
}

ReportDoc make_report_doc(const SpectrumReport& rep, double tol) {
  if (rep.eigenvalues.empty())
    throw NotApplicable("spectrum report needs at least one eigenvalue");
  ReportDoc doc;
  doc.report = rep;
  doc.tol = tol;
  doc.verdict = rep.min_eigenvalue() >= -tol ? "psd" : "indefinite";
  if (rep.params.r < rep.params.k + 2) doc.flags.push_back("out-of-range");
  return doc;
}

std::string report_to_json(const ReportDoc& doc) {
  return json{{"params", {{"r", doc.report.params.r}, {"k", doc.report.params.k}}},
              {"defect", doc.report.defect},
              {"min_eig", doc.report.eigenvalues.empty()
                              ? json()
                              : json(doc.report.min_eigenvalue())},
              {"eigs", doc.report.eigenvalues},
              {"verdict", doc.verdict},
              {"flags", doc.flags},
              {"tol", doc.tol}}
      .dump(2);
}

ReportDoc report_from_json(const std::string& text) {
  const json doc = parse_text(text);
  return checked([&] {
    ReportDoc out;
    out.report.params = EvalParams::at(doc.at("params").at("r").get<int>(),
                                       doc.at("params").at("k").get<int>());
    out.report.defect = doc.at("defect").get<double>();
    out.report.eigenvalues = doc.at("eigs").get<std::vector<double>>();
    out.tol = doc.at("tol").get<double>();
    out.verdict = doc.at("verdict").get<std::string>();
    out.flags = doc.at("flags").get<std::vector<std::string>>();
    return out;
  });
}

}  // namespace thl
