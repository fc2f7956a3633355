#include "qtensor/report.hpp"

#include <ostream>
#include <sstream>

namespace qtensor {

using nlohmann::json;

std::string format_pair(const std::pair<int, int>& p) {
    std::ostringstream os;
    os << "(" << p.first << ", " << p.second << ")";
    return os.str();
}

std::vector<std::string> class_display_labels(const TensorProduct& t) {
    if (auto named = dihedral_class_labels(t)) return *named;
    std::vector<std::string> out;
    out.reserve(t.reps.size());
    for (const auto& rep : t.reps) {
        std::ostringstream os;
        os << "[" << rep.first << "," << rep.second << "]";
        out.push_back(os.str());
    }
    return out;
}

namespace {

json pair_json(const std::pair<int, int>& p) { return json::array({p.first, p.second}); }

// A requested quotient, resolved against the available involutions.
struct NamedQuotient {
    std::string name;
    QuotientSet set;
};

std::vector<NamedQuotient> resolve_quotients(const TensorProduct& t,
                                             const std::optional<GoodInvolution>& rho,
                                             const std::vector<std::string>& names) {
    std::vector<NamedQuotient> out;
    std::optional<ClassInvolution> tau;
    std::optional<ClassInvolution> rho_cls;
    const auto tau_once = [&]() -> const ClassInvolution& {
        if (!tau) tau = tau_map(t);
        return *tau;
    };
    const auto rho_once = [&]() -> const ClassInvolution& {
        if (!rho_cls) {
            if (!rho)
                throw ValidationError(
                    "a rho quotient needs an involution, in the file or via --rho");
            rho_cls = rho_map(t, *rho);
        }
        return *rho_cls;
    };
    for (const std::string& name : names) {
        std::vector<ClassInvolution> gens;
        if (name == "tau") {
            gens = {tau_once()};
        } else if (name == "rho") {
            gens = {rho_once()};
        } else if (name == "tau,rho") {
            gens = {tau_once(), rho_once()};
        } else {
            throw std::invalid_argument("unknown quotient selector: " + name);
        }
        out.push_back({name, quotient(t, gens)});
    }
    return out;
}

json document_core(const TensorProduct& t, const std::optional<GoodInvolution>& rho,
                   const std::vector<NamedQuotient>& quotients) {
    json doc;
    doc["n"] = t.quandle.n;

    json classes = json::array();
    for (const auto& cls : t.classes) {
        json members = json::array();
        for (const auto& p : cls) members.push_back(pair_json(p));
        classes.push_back(std::move(members));
    }
    doc["classes"] = std::move(classes);

    json reps = json::array();
    for (const auto& rep : t.reps) reps.push_back(pair_json(rep));
    doc["reps"] = std::move(reps);

    doc["tau"] = tau_map(t).map;
    if (rho) doc["rho"] = rho_map(t, *rho).map;

    json quots = json::object();
    json counts = json::object();
    counts["classes"] = t.size();
    for (const NamedQuotient& nq : quotients) {
        quots[nq.name] = nq.set.blocks;
        counts[nq.name] = nq.set.size();
    }
    doc["quotients"] = std::move(quots);
    doc["counts"] = std::move(counts);
    return doc;
}

void print_core(std::ostream& out, const TensorProduct& t,
                const std::vector<NamedQuotient>& quotients) {
    const std::vector<std::string> labels = class_display_labels(t);
    out << "quandle order " << t.quandle.n << "\n";
    out << "classes " << t.size() << "\n";
    for (int c = 0; c < t.size(); ++c) {
        out << "  " << c << "  " << labels[c] << "  {";
        bool first = true;
        for (const auto& p : t.classes[c]) {
            if (!first) out << ", ";
            first = false;
            out << format_pair(p);
        }
        out << "}\n";
    }
    for (const NamedQuotient& nq : quotients) {
        out << "quotient " << nq.name << "  blocks " << nq.set.size() << "\n";
        for (std::size_t b = 0; b < nq.set.blocks.size(); ++b) {
            out << "  " << b << "  {";
            bool first = true;
            for (const int c : nq.set.blocks[b]) {
                if (!first) out << ", ";
                first = false;
                out << labels[c];
            }
            out << "}\n";
        }
    }
}

} // namespace

json tensor_document(const TensorProduct& t, const std::optional<GoodInvolution>& rho,
                     const std::vector<std::string>& quotients) {
    return document_core(t, rho, resolve_quotients(t, rho, quotients));
}

void print_tensor_document(std::ostream& out, const TensorProduct& t,
                           const std::optional<GoodInvolution>& rho,
                           const std::vector<std::string>& quotients) {
    print_core(out, t, resolve_quotients(t, rho, quotients));
}

json handles_document(const HandleReport& r) {
    json counts;
    counts["strong_all"] = r.strong_all();
    counts["weak_all"] = r.weak_all();
    if (const auto so = r.strong_oriented()) counts["strong_oriented"] = *so;
    if (const auto wo = r.weak_oriented()) counts["weak_oriented"] = *wo;

    json doc;
    doc["counts"] = std::move(counts);
    if (r.oriented_tensor)
        doc["oriented"] = document_core(*r.oriented_tensor, std::nullopt,
                                        {{"tau", *r.oriented_weak}});
    doc["all"] = document_core(r.all_tensor, r.all.rho, {{"tau,rho", r.all_weak}});
    return doc;
}

void print_handles_document(std::ostream& out, const HandleReport& r) {
    out << "strong all " << r.strong_all() << "\n";
    out << "weak all " << r.weak_all() << "\n";
    if (const auto so = r.strong_oriented()) out << "strong oriented " << *so << "\n";
    if (const auto wo = r.weak_oriented()) out << "weak oriented " << *wo << "\n";
    if (r.oriented_tensor) {
        out << "oriented classes:\n";
        print_core(out, *r.oriented_tensor, {{"tau", *r.oriented_weak}});
    }
    out << "all classes (symmetric carrier):\n";
    print_core(out, r.all_tensor, {{"tau,rho", r.all_weak}});
}

json cross_check_document(const std::vector<CrossCheckReport>& reports) {
    json arr = json::array();
    for (const CrossCheckReport& rep : reports) {
        json entries = json::array();
        for (const CrossCheckEntry& e : rep.entries) {
            json entry;
            entry["what"] = e.what;
            entry["ok"] = e.ok;
            if (!e.detail.empty()) entry["detail"] = e.detail;
            entries.push_back(std::move(entry));
        }
        json item;
        item["n"] = rep.n;
        item["ok"] = rep.ok;
        item["entries"] = std::move(entries);
        if (!rep.notes.empty()) item["notes"] = rep.notes;
        arr.push_back(std::move(item));
    }
    return arr;
}

void print_cross_check(std::ostream& out, const CrossCheckReport& rep) {
    out << "n " << rep.n << "  " << (rep.ok ? "ok" : "MISMATCH") << "\n";
    for (const CrossCheckEntry& e : rep.entries) {
        out << "  " << (e.ok ? "ok  " : "FAIL") << "  " << e.what;
        if (!e.detail.empty()) out << "  (" << e.detail << ")";
        out << "\n";
    }
    for (const std::string& note : rep.notes) out << "  note: " << note << "\n";
}

json quandle_document(const Quandle& q, const std::optional<GoodInvolution>& rho) {
    json doc;
    doc["n"] = q.n;
    json rows = json::array();
    for (int x = 0; x < q.n; ++x) {
        json row = json::array();
        for (int y = 0; y < q.n; ++y) row.push_back(q.op(x, y));
        rows.push_back(std::move(row));
    }
    doc["table"] = std::move(rows);
    if (rho) doc["involution"] = rho->rho;
    return doc;
}

} // namespace qtensor
