#pragma once

// JSON formats for every value the toolkit exchanges with the outside:
//
//   matrix    {"dim": n, "re": [[..]], "im": [[..]]}   row-major; "im"
//             omitted means an all-zero imaginary part
//   extended  "-inf" | "+inf" | number
//   context   {"atoms": [matrix, ..]}
//             or {"basis": [[entry, ..], ..], "blocks": [k1, k2, ..]} with
//             each basis vector a list of numbers or [re, im] pairs and the
//             blocks carving the basis into consecutive atoms
//   family    {"continuity": "right"|"left",
//              "jumps": [{"r": number, "P": matrix}, ..]}
//   function  {"breakpoints": [[x, y], ..],
//              "left_slope": s, "right_slope": s}
//   table     {"entries": [{"P_mask": m, "value": extended}, ..]}
//
// Schema problems throw input-class errors; nothing here performs numerics
// beyond the validating constructors of the target types.

#include <fstream>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "specord/calculus.hpp"
#include "specord/extreal.hpp"
#include "specord/matrix.hpp"
#include "specord/projection.hpp"
#include "specord/spectral_family.hpp"

namespace specord::io {

using json = nlohmann::ordered_json;

inline json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open file: " + path);
    try {
        return json::parse(in);
    } catch (const json::exception& e) {
        throw Error("cannot parse " + path + ": " + e.what());
    }
}

inline void save_json_file(const std::string& path, const json& j) {
    std::ofstream out(path);
    if (!out) throw Error("cannot open file for writing: " + path);
    out << j.dump(2) << "\n";
}

namespace detail {

inline double require_number(const json& j, const std::string& where) {
    if (!j.is_number()) throw Error(where + ": expected a number");
    return j.get<double>();
}

inline const json& require_key(const json& j, const std::string& key, const std::string& where) {
    if (!j.is_object()) throw Error(where + ": expected an object");
    auto it = j.find(key);
    if (it == j.end()) throw Error(where + ": missing key \"" + key + "\"");
    return *it;
}

inline std::vector<std::vector<double>> require_square(const json& j, int n,
                                                       const std::string& where) {
    if (!j.is_array() || static_cast<int>(j.size()) != n)
        throw Error(where + ": expected " + std::to_string(n) + " rows");
    std::vector<std::vector<double>> rows;
    for (const auto& row : j) {
        if (!row.is_array() || static_cast<int>(row.size()) != n)
            throw Error(where + ": expected " + std::to_string(n) + " entries per row");
        std::vector<double> r;
        for (const auto& v : row) r.push_back(require_number(v, where));
        rows.push_back(std::move(r));
    }
    return rows;
}

}  // namespace detail

inline ComplexMatrix matrix_from_json(const json& j, const std::string& where = "matrix") {
    const json& jd = detail::require_key(j, "dim", where);
    if (!jd.is_number_integer() || jd.get<int>() < 1)
        throw Error(where + ": \"dim\" must be a positive integer");
    const int n = jd.get<int>();
    auto re = detail::require_square(detail::require_key(j, "re", where), n, where + ".re");
    std::vector<std::vector<double>> im(static_cast<size_t>(n),
                                        std::vector<double>(static_cast<size_t>(n), 0.0));
    if (j.contains("im")) im = detail::require_square(j.at("im"), n, where + ".im");
    ComplexMatrix m(n);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k)
            m.at(i, k) = Complex(re[static_cast<size_t>(i)][static_cast<size_t>(k)],
                                 im[static_cast<size_t>(i)][static_cast<size_t>(k)]);
    return m;
}

inline json matrix_to_json(const ComplexMatrix& m) {
    const int n = m.dim();
    json re = json::array();
    json im = json::array();
    bool any_im = false;
    for (int i = 0; i < n; ++i) {
        json rrow = json::array();
        json irow = json::array();
        for (int k = 0; k < n; ++k) {
            rrow.push_back(m.at(i, k).real());
            irow.push_back(m.at(i, k).imag());
            if (m.at(i, k).imag() != 0.0) any_im = true;
        }
        re.push_back(std::move(rrow));
        im.push_back(std::move(irow));
    }
    json out;
    out["dim"] = n;
    out["re"] = std::move(re);
    if (any_im) out["im"] = std::move(im);
    return out;
}

inline ExtendedReal extreal_from_json(const json& j, const std::string& where = "value") {
    if (j.is_string()) {
        const std::string s = j.get<std::string>();
        if (s == "-inf") return ExtendedReal::neg_inf();
        if (s == "+inf") return ExtendedReal::pos_inf();
        throw Error(where + ": expected \"-inf\", \"+inf\", or a number");
    }
    return ExtendedReal::finite(detail::require_number(j, where));
}

inline json extreal_to_json(const ExtendedReal& v) {
    if (v.is_neg_inf()) return json("-inf");
    if (v.is_pos_inf()) return json("+inf");
    return json(v.value());
}

inline AbelianContext context_from_json(const json& j, const Tolerance& tol = default_tolerance(),
                                        const std::string& where = "context") {
    if (j.contains("atoms")) {
        const json& ja = j.at("atoms");
        if (!ja.is_array() || ja.empty()) throw Error(where + ": \"atoms\" must be a nonempty array");
        std::vector<Projection> atoms;
        for (size_t i = 0; i < ja.size(); ++i)
            atoms.emplace_back(
                matrix_from_json(ja[i], where + ".atoms[" + std::to_string(i) + "]"), tol);
        return AbelianContext(std::move(atoms), tol);
    }
    const json& jb = detail::require_key(j, "basis", where);
    const json& jk = detail::require_key(j, "blocks", where);
    if (!jb.is_array() || jb.empty()) throw Error(where + ": \"basis\" must be a nonempty array");
    const int n = static_cast<int>(jb.size());
    ComplexMatrix u(n);
    for (int c = 0; c < n; ++c) {
        const json& vec = jb[static_cast<size_t>(c)];
        if (!vec.is_array() || static_cast<int>(vec.size()) != n)
            throw Error(where + ".basis: expected " + std::to_string(n) + " entries per vector");
        for (int i = 0; i < n; ++i) {
            const json& e = vec[static_cast<size_t>(i)];
            if (e.is_array()) {
                if (e.size() != 2)
                    throw Error(where + ".basis: a complex entry is a [re, im] pair");
                u.at(i, c) = Complex(detail::require_number(e[0], where + ".basis"),
                                     detail::require_number(e[1], where + ".basis"));
            } else {
                u.at(i, c) = Complex(detail::require_number(e, where + ".basis"), 0.0);
            }
        }
    }
    if (!jk.is_array() || jk.empty()) throw Error(where + ": \"blocks\" must be a nonempty array");
    std::vector<Projection> atoms;
    int next = 0;
    for (const auto& bj : jk) {
        if (!bj.is_number_integer() || bj.get<int>() < 1)
            throw Error(where + ": block sizes must be positive integers");
        std::vector<int> cols;
        for (int c = 0; c < bj.get<int>(); ++c) cols.push_back(next++);
        if (next > n) throw Error(where + ": block sizes exceed the basis size");
        // revalidate: the basis came from outside and may not be orthonormal
        atoms.emplace_back(Projection::from_columns(u, cols).matrix(), tol);
    }
    if (next != n) throw Error(where + ": block sizes must sum to the basis size");
    return AbelianContext(std::move(atoms), tol);
}

inline json context_to_json(const AbelianContext& ctx) {
    json atoms = json::array();
    for (const auto& q : ctx.atoms()) atoms.push_back(matrix_to_json(q.matrix()));
    json out;
    out["atoms"] = std::move(atoms);
    return out;
}

inline SpectralFamily family_from_json(const json& j, const Tolerance& tol = default_tolerance(),
                                       const std::string& where = "family") {
    const json& jc = detail::require_key(j, "continuity", where);
    Continuity cont;
    if (jc == "right")
        cont = Continuity::Right;
    else if (jc == "left")
        cont = Continuity::Left;
    else
        throw Error(where + ": \"continuity\" must be \"right\" or \"left\"");
    const json& jj = detail::require_key(j, "jumps", where);
    if (!jj.is_array()) throw Error(where + ": \"jumps\" must be an array");
    std::vector<SpectralJump> jumps;
    for (size_t i = 0; i < jj.size(); ++i) {
        const std::string wi = where + ".jumps[" + std::to_string(i) + "]";
        double r = detail::require_number(detail::require_key(jj[i], "r", wi), wi + ".r");
        Projection p(matrix_from_json(detail::require_key(jj[i], "P", wi), wi + ".P"), tol);
        jumps.push_back({r, std::move(p)});
    }
    return SpectralFamily(cont, std::move(jumps), tol);
}

inline json family_to_json(const SpectralFamily& fam) {
    json out;
    out["continuity"] = fam.continuity() == Continuity::Right ? "right" : "left";
    json jumps = json::array();
    for (const auto& jp : fam.jumps()) {
        json e;
        e["r"] = jp.at;
        e["P"] = matrix_to_json(jp.proj.matrix());
        jumps.push_back(std::move(e));
    }
    out["jumps"] = std::move(jumps);
    return out;
}

inline MonotoneExtFunction function_from_json(const json& j,
                                              const std::string& where = "function") {
    const json& jb = detail::require_key(j, "breakpoints", where);
    if (!jb.is_array()) throw Error(where + ": \"breakpoints\" must be an array");
    std::vector<std::pair<double, double>> bps;
    for (const auto& e : jb) {
        if (!e.is_array() || e.size() != 2)
            throw Error(where + ": each breakpoint is an [x, y] pair");
        bps.emplace_back(detail::require_number(e[0], where + ".breakpoints"),
                         detail::require_number(e[1], where + ".breakpoints"));
    }
    double sl = detail::require_number(detail::require_key(j, "left_slope", where),
                                       where + ".left_slope");
    double sr = detail::require_number(detail::require_key(j, "right_slope", where),
                                       where + ".right_slope");
    return MonotoneExtFunction(std::move(bps), sl, sr);
}

inline json function_to_json(const MonotoneExtFunction& f) {
    json bps = json::array();
    for (const auto& n : f.nodes()) {
        bps.push_back(json::array({n.x, n.y_at}));
        if (n.y_after != n.y_at) bps.push_back(json::array({n.x, n.y_after}));
    }
    json out;
    out["breakpoints"] = std::move(bps);
    out["left_slope"] = f.left_slope();
    out["right_slope"] = f.right_slope();
    return out;
}

struct TableEntry {
    uint32_t mask;
    ExtendedReal value;
};

inline json table_to_json(const std::vector<TableEntry>& entries) {
    json arr = json::array();
    for (const auto& e : entries) {
        json row;
        row["P_mask"] = e.mask;
        row["value"] = extreal_to_json(e.value);
        arr.push_back(std::move(row));
    }
    json out;
    out["entries"] = std::move(arr);
    return out;
}

inline std::vector<TableEntry> table_from_json(const json& j, const std::string& where = "table") {
    const json& je = detail::require_key(j, "entries", where);
    if (!je.is_array()) throw Error(where + ": \"entries\" must be an array");
    std::vector<TableEntry> entries;
    for (size_t i = 0; i < je.size(); ++i) {
        const std::string wi = where + ".entries[" + std::to_string(i) + "]";
        const json& jm = detail::require_key(je[i], "P_mask", wi);
        if (!jm.is_number_integer() || jm.get<int64_t>() < 0)
            throw Error(wi + ": \"P_mask\" must be a nonnegative integer");
        entries.push_back({static_cast<uint32_t>(jm.get<int64_t>()),
                           extreal_from_json(detail::require_key(je[i], "value", wi), wi)});
    }
    return entries;
}

}  // namespace specord::io
