#include "gps/render.hpp"

#include <json.hpp>
#include <sstream>

namespace gps {

using Json = nlohmann::ordered_json;

std::string to_string(RadicalStrategy s)
{
    switch (s) {
    case RadicalStrategy::Prime: return "prime";
    case RadicalStrategy::FiniteQuotient: return "finite-quotient";
    case RadicalStrategy::Multiplication: return "multiplication";
    }
    return "?";
}

namespace {

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Json envelope(const std::string& kind)
{
    Json j;
    j["schema"] = 1;
    j["kind"] = kind;
    return j;
}

void reject_dot(Format f, const char* what)
{
    if (f == Format::Dot)
        throw InputError(std::string("dot output is not available for ") + what);
}

std::string ideal_text(const Ideal& i) { return "(" + std::to_string(i.generator()) + ")"; }

// Generator vectors grouped by degree, ascending.
Json submodule_json(const GradedSubmodule& n)
{
    const GradedModule& m = n.module();
    Json gens = Json::object();
    for (std::size_t s = 0; s < m.slot_count(); ++s)
        gens[format_degree(m.group(), m.slot_degree(s))] = Json::array();
    for (const ModuleElement& g : n.generators()) {
        const auto comps = homogeneous_components(m, g);
        gens[format_degree(m.group(), comps.at(0).degree)].push_back(g.coordinates());
    }
    Json j;
    j["label"] = pretty_submodule(n);
    j["generators"] = gens;
    return j;
}

Json indices(const PointSet& s)
{
    Json a = Json::array();
    for (std::size_t i : s.indices())
        a.push_back(i);
    return a;
}

std::string point_label(const FiniteSpace& s, std::size_t i)
{
    return s.is_module_space() ? pretty_submodule(s.points()[i]) : ideal_text(s.ring_points()[i]);
}

std::string set_text(const FiniteSpace& s, const PointSet& y)
{
    std::string out = "{";
    bool first = true;
    for (std::size_t i : y.indices()) {
        out += first ? "" : ", ";
        first = false;
        out += point_label(s, i);
    }
    return out + "}";
}

Json points_json(const FiniteSpace& s)
{
    Json a = Json::array();
    for (std::size_t i = 0; i < s.size(); ++i)
        if (s.is_module_space())
            a.push_back(submodule_json(s.points()[i]));
        else
            a.push_back(Json{{"label", ideal_text(s.ring_points()[i])}, {"generator", s.ring_points()[i].generator()}});
    return a;
}

Json space_json(const FiniteSpace& s)
{
    Json j;
    j["space"] = to_string(s.kind());
    j["points"] = points_json(s);
    Json closed = Json::array();
    for (const ClosedSet& c : s.closed_sets()) {
        Json e;
        e["points"] = indices(c.set);
        if (c.submodule)
            e["witness"] = pretty_submodule(*c.submodule);
        else if (c.ideal)
            e["witness"] = ideal_text(*c.ideal);
        closed.push_back(e);
    }
    j["closed_sets"] = closed;
    Json base = Json::array();
    for (const BaseOpen& b : s.base())
        base.push_back(Json{{"r", b.representative}, {"points", indices(b.set)}});
    j["base"] = base;
    return j;
}

void space_text(std::ostringstream& os, const FiniteSpace& s)
{
    os << to_string(s.kind()) << ": " << s.size() << " point" << (s.size() == 1 ? "" : "s") << "\n";
    for (std::size_t i = 0; i < s.size(); ++i) {
        os << "  [" << i << "] " << point_label(s, i);
        if (s.is_module_space())
            os << "  gens " << generator_list(s.points()[i]);
        os << "\n";
    }
    os << "closed sets: " << s.closed_sets().size() << "\n";
    for (const ClosedSet& c : s.closed_sets()) {
        os << "  " << set_text(s, c.set);
        if (c.submodule)
            os << "  = nu(" << pretty_submodule(*c.submodule) << ")";
        else if (c.ideal)
            os << "  = V(" << ideal_text(*c.ideal) << ")";
        os << "\n";
    }
    os << "base:\n";
    for (const BaseOpen& b : s.base())
        os << "  " << (s.is_module_space() ? "S_" : "D_") << b.representative << " = " << set_text(s, b.set) << "\n";
}

Json witness_json(const Witness& w)
{
    Json j;
    j["description"] = w.description;
    Json subs = Json::array();
    for (const GradedSubmodule& n : w.submodules)
        subs.push_back(submodule_json(n));
    j["submodules"] = subs;
    Json ideals = Json::array();
    for (const Ideal& i : w.ideals)
        ideals.push_back(ideal_text(i));
    j["ideals"] = ideals;
    return j;
}

}  // namespace

std::string render_model(const Model& m, Format f)
{
    reject_dot(f, "models");
    if (f == Format::Text)
        return gps::render_model(m);
    Json j = envelope("model");
    j["group"] = m.group.cyclic_orders();
    j["ring"] = m.ring.modulus();
    Json factors = Json::array();
    for (const Factor& x : m.module.factors())
        factors.push_back(Json{{"order", x.order}, {"degree", format_degree(m.group, x.degree)}});
    j["module"] = factors;
    Json subs = Json::object();
    for (const auto& [name, n] : m.submodules)
        subs[name] = submodule_json(n);
    j["submodules"] = subs;
    Json sets = Json::object();
    for (const auto& [name, members] : m.subsets)
        sets[name] = members;
    j["subsets"] = sets;
    return dump(j);
}

std::string render_points(const std::string& title, const std::vector<GradedSubmodule>& points, Format f)
{
    if (f == Format::Json) {
        Json j = envelope("points");
        j["set"] = title;
        Json a = Json::array();
        for (const GradedSubmodule& p : points)
            a.push_back(submodule_json(p));
        j["points"] = a;
        return dump(j);
    }
    std::ostringstream os;
    if (f == Format::Dot) {
        os << "digraph points {\n";
        for (std::size_t i = 0; i < points.size(); ++i)
            os << "  p" << i << " [label=\"" << generator_list(points[i]) << "\"];\n";
        os << "}\n";
        return os.str();
    }
    os << title << ": " << points.size() << " point" << (points.size() == 1 ? "" : "s") << "\n";
    for (std::size_t i = 0; i < points.size(); ++i)
        os << "  [" << i << "] " << pretty_submodule(points[i]) << "  gens " << generator_list(points[i]) << "\n";
    return os.str();
}

std::string render_radical(const GradedSubmodule& n, const RadicalResult& r, Format f)
{
    reject_dot(f, "radicals");
    const char* kind = r.kind() == RadicalResult::Kind::Submodule ? "submodule"
                       : r.kind() == RadicalResult::Kind::Top  ? "top"
                                                                : "unknown";
    if (f == Format::Json) {
        Json j = envelope("radical");
        j["submodule"] = submodule_json(n);
        j["result"] = kind;
        if (r.is_known()) {
            j["radical"] = submodule_json(r.value());
            j["strategy"] = to_string(*r.strategy());
        } else {
            j["reason"] = r.reason();
            j["attempted"] = r.attempted();
        }
        return dump(j);
    }
    std::ostringstream os;
    os << "Gr(" << pretty_submodule(n) << ") = ";
    if (r.is_known())
        os << pretty_submodule(r.value()) << (r.kind() == RadicalResult::Kind::Top ? " (no prime contains N)" : "")
           << "  via " << to_string(*r.strategy()) << "\n";
    else {
        os << "unknown: " << r.reason() << "\n";
        for (const std::string& a : r.attempted())
            os << "  tried " << a << "\n";
    }
    return os.str();
}

std::string render_variety(const FiniteSpace& space, const GradedSubmodule& n, bool star, Format f)
{
    reject_dot(f, "varieties");
    const PointSet v = star ? space.nu_star(n) : space.nu(n);
    const bool prime_space = space.kind() == SpaceKind::PrimeSpectrum;
    const std::string name = prime_space ? (star ? "V*" : "V") : (star ? "nu*" : "nu");
    if (f == Format::Json) {
        Json j = envelope("variety");
        j["variety"] = name;
        j["space"] = to_string(space.kind());
        j["submodule"] = submodule_json(n);
        j["points"] = points_json(space);
        j["members"] = indices(v);
        return dump(j);
    }
    return name + "(" + pretty_submodule(n) + ") = " + set_text(space, v) + "\n";
}

std::string render_space(const FiniteSpace& space, Format f)
{
    if (f == Format::Dot)
        return specialization_dot(space);
    if (f == Format::Json) {
        Json j = envelope("space");
        j.update(space_json(space));
        return dump(j);
    }
    std::ostringstream os;
    space_text(os, space);
    return os.str();
}

std::string render_topology(const FiniteSpace& space, const TopologyReport& r, Format f)
{
    if (f == Format::Dot)
        return specialization_dot(space);
    const std::vector<std::pair<const char*, bool>> flags = {
        {"connected", r.connected},   {"irreducible", r.irreducible},
        {"t0", r.t0},                 {"t1", r.t1},
        {"sober", r.sober},           {"quasi_compact", r.quasi_compact},
        {"hochster_opens", r.hochster_opens}, {"spectral", r.spectral},
        {"trivial", r.trivial},
    };
    if (f == Format::Json) {
        Json j = envelope("topology");
        j.update(space_json(space));
        Json fl;
        for (const auto& [k, v] : flags)
            fl[k] = v;
        j["flags"] = fl;
        Json comps = Json::array();
        for (const Component& c : r.components)
            comps.push_back(Json{{"points", indices(c.set)}, {"generic_points", c.generic_points}});
        j["components"] = comps;
        return dump(j);
    }
    std::ostringstream os;
    space_text(os, space);
    os << "flags:\n";
    for (const auto& [k, v] : flags)
        os << "  " << k << " = " << (v ? "true" : "false") << "\n";
    os << "components:\n";
    for (const Component& c : r.components) {
        os << "  " << set_text(space, c.set) << "  generic";
        for (std::size_t g : c.generic_points)
            os << " " << point_label(space, g);
        os << "\n";
    }
    return os.str();
}

std::string render_map(const FiniteSpace& domain, const FiniteSpace& ring_space, const MapAnalysis& a, Format f)
{
    reject_dot(f, "maps");
    const char* name = a.kind == MapKind::Rho ? "rho" : "phi";
    const std::vector<std::pair<const char*, bool>> flags = {
        {"injective", a.injective}, {"surjective", a.surjective}, {"continuous", a.continuous},
        {"open", a.open},           {"closed", a.closed},         {"homeomorphism", a.homeomorphism},
    };
    if (f == Format::Json) {
        Json j = envelope("map");
        j["map"] = name;
        j["domain"] = points_json(domain);
        j["codomain"] = points_json(ring_space);
        j["images"] = a.images;
        Json fl;
        for (const auto& [k, v] : flags)
            fl[k] = v;
        j["flags"] = fl;
        Json fibers = Json::object();
        for (const Fiber& x : a.fibers)
            fibers[std::to_string(x.prime.generator())] = indices(x.points);
        j["fibers"] = fibers;
        Json cont = Json::array();
        for (const ContinuityCheck& c : a.continuity)
            cont.push_back(Json{{"ideal", ideal_text(c.ideal)},
                                {"preimage", indices(c.preimage)},
                                {"variety", indices(c.variety)}});
        j["continuity"] = cont;
        return dump(j);
    }
    std::ostringstream os;
    os << name << ": " << domain.size() << " point" << (domain.size() == 1 ? "" : "s") << " -> Spec(Z"
       << ring_space.ring().modulus() << ")\n";
    for (std::size_t i = 0; i < a.images.size(); ++i)
        os << "  " << point_label(domain, i) << " -> " << point_label(ring_space, a.images[i]) << "\n";
    for (const auto& [k, v] : flags)
        os << k << " = " << (v ? "true" : "false") << "\n";
    os << "fibers:\n";
    for (const Fiber& x : a.fibers)
        os << "  " << ideal_text(x.prime) << ": " << set_text(domain, x.points) << "\n";
    return os.str();
}

std::string render_checks(const std::vector<CheckResult>& results, Format f, bool timings)
{
    reject_dot(f, "check reports");
    std::size_t counts[4] = {0, 0, 0, 0};
    for (const CheckResult& r : results)
        ++counts[static_cast<int>(r.status)];
    if (f == Format::Json) {
        Json j = envelope("checks");
        Json a = Json::array();
        for (const CheckResult& r : results) {
            Json e;
            e["id"] = r.id;
            e["instance"] = r.instance;
            e["status"] = to_string(r.status);
            e["detail"] = r.detail;
            e["cases"] = r.cases;
            e["vacuous_cases"] = r.vacuous;
            e["notes"] = r.notes;
            if (timings)
                e["elapsed_ms"] = r.elapsed_ms;
            a.push_back(e);
        }
        j["results"] = a;
        j["summary"] = Json{{"pass", counts[0]}, {"vacuous", counts[1]}, {"fail", counts[2]}, {"skipped", counts[3]}};
        return dump(j);
    }
    std::ostringstream os;
    for (const CheckResult& r : results) {
        std::string status = to_string(r.status);
        status.resize(8, ' ');
        std::string id = r.id;
        id.resize(9, ' ');
        os << status << id << r.instance << "  " << r.detail;
        if (timings)
            os << "  [" << r.elapsed_ms << " ms]";
        os << "\n";
        for (const std::string& n : r.notes)
            os << "        note: " << n << "\n";
    }
    os << "summary: " << counts[0] << " pass, " << counts[1] << " vacuous, " << counts[2] << " fail, " << counts[3]
       << " skipped\n";
    return os.str();
}

std::string render_trilean(const std::string& what, const Trilean& t, Format f)
{
    reject_dot(f, "properties");
    if (f == Format::Json) {
        Json j = envelope("property");
        j["property"] = what;
        j["value"] = to_string(t.kind());
        if (t.witness())
            j["witness"] = witness_json(*t.witness());
        if (t.is_unknown())
            j["reason"] = t.reason();
        return dump(j);
    }
    std::string out = what + " = " + to_string(t.kind());
    if (t.witness())
        out += " (" + t.witness()->description + ")";
    if (t.is_unknown())
        out += " (" + t.reason() + ")";
    return out + "\n";
}

std::string specialization_dot(const FiniteSpace& space)
{
    const std::size_t n = space.size();
    std::vector<PointSet> cl;
    for (std::size_t i = 0; i < n; ++i)
        cl.push_back(space.closure(space.singleton(i)));
    // classes of points with equal closure, in order of first member
    std::vector<std::size_t> cls(n);
    std::vector<std::vector<std::size_t>> members;
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t k = 0;
        while (k < members.size() && !(cl[members[k][0]] == cl[i]))
            ++k;
        if (k == members.size())
            members.emplace_back();
        members[k].push_back(i);
        cls[i] = k;
    }
    const std::size_t m = members.size();
    // a -> b when b's representative lies in Cl(a), a != b
    auto above = [&](std::size_t a, std::size_t b) { return a != b && cl[members[a][0]].test(members[b][0]); };

    std::ostringstream os;
    os << "digraph specialization {\n  rankdir=BT;\n  node [shape=box];\n";
    for (std::size_t k = 0; k < m; ++k) {
        const bool cluster = members[k].size() > 1;
        if (cluster)
            os << "  subgraph cluster_" << k << " {\n    label=\"equal closures\";\n";
        for (std::size_t i : members[k]) {
            os << (cluster ? "    " : "  ") << "p" << i << " [label=\""
               << (space.is_module_space() ? generator_list(space.points()[i]) : point_label(space, i)) << "\"];\n";
        }
        if (cluster)
            os << "  }\n";
    }
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = 0; b < m; ++b) {
            if (!above(a, b))
                continue;
            bool covered = true;
            for (std::size_t c = 0; c < m; ++c)
                if (c != a && c != b && above(a, c) && above(c, b))
                    covered = false;
            if (covered)
                os << "  p" << members[a][0] << " -> p" << members[b][0] << ";\n";
        }
    os << "}\n";
    return os.str();
}

}  // namespace gps
