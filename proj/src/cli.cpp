#include "pqpolys/cli.hpp"

#include <sstream>

#include "json.hpp"
#include "pqpolys/families.hpp"
#include "pqpolys/numthy.hpp"
#include "pqpolys/polycore.hpp"
#include "pqpolys/verify.hpp"

namespace pqpolys {

namespace {

using nlohmann::json;

std::string csv_quote(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string quoted = "\"";
    for (char c : s) {
        if (c == '"') quoted += '"';
        quoted += c;
    }
    return quoted + "\"";
}

json poly_json(const Polynomial& f) { return json(f.coeff_strings()); }

/// Factored rendering of W_n as c * x^n * (1-2x) * cofactor, cofactor a
/// primitive integer polynomial (the scaled V_n). Pieces equal to 1 are
/// omitted, matching the reference tables.
std::string factored_w(unsigned n) {
    const Polynomial w = w_poly(n);
    auto [m1, r1] = divmod(w, Polynomial::monomial(1, n));
    auto [m2, r2] = divmod(m1, Polynomial(std::vector<Rational>{1, -2}));
    if (!r1.is_zero() || !r2.is_zero())
        throw std::logic_error("W_n lost its x^n (1-2x) factor");
    const Rational c = m2.content();
    const Polynomial cofactor = (Rational(1) / c) * m2;
    std::string out;
    if (c != Rational(1)) out += c.str() + "*";
    out += n == 1 ? "x" : "x^" + std::to_string(n);
    out += "*(1-2*x)";
    if (cofactor != Polynomial(1)) out += "*(" + cofactor.human() + ")";
    return out;
}

/// Y_{3m} and Z_{3m} factor through x and x+1; the tables print them that way.
std::string rendered_y(unsigned n, const Polynomial& y) {
    if (n > 0 && n % 3 == 0) {
        auto [cof, rem] = divmod(y, Polynomial::x());
        if (rem.is_zero()) return "x*(" + cof.human() + ")";
    }
    return y.human();
}

std::string rendered_z(unsigned n, const Polynomial& z) {
    if (n > 0 && n % 3 == 0) {
        auto [cof, rem] = divmod(z, Polynomial::x() + Polynomial(1));
        if (rem.is_zero()) return "(x+1)*(" + cof.human() + ")";
    }
    return z.human();
}

struct TableSpec {
    std::string header_text;
    std::string header_csv;
};

const TableSpec kTableSpecs[4] = {
    {"n | P_n(x) | Q_n(x)", "n,P,Q"},
    {"n | Y_n(x) | Z_n(x)", "n,Y,Z"},
    {"n | Q_n(-x)^2-Q_{n-1}(-x)Q_{n+1}(-x) factored", "n,factored"},
    {"n | W_n(x)", "n,W"},
};

}  // namespace

OutputFormat parse_format(const std::string& name) {
    if (name == "text") return OutputFormat::text;
    if (name == "json") return OutputFormat::json;
    if (name == "csv") return OutputFormat::csv;
    throw UsageError("unknown format: " + name);
}

std::string render_table(int which, int nmax, OutputFormat format) {
    if (which < 1 || which > 4) throw UsageError("table id must be 1..4");
    const int nmin = which <= 2 ? 0 : 1;
    if (nmax < nmin)
        throw UsageError("table " + std::to_string(which) + " needs nmax >= " +
                         std::to_string(nmin));

    std::vector<std::vector<std::string>> text_cells;
    json rows = json::array();
    for (int n = nmin; n <= nmax; ++n) {
        switch (which) {
            case 1: {
                const Polynomial p = p_poly(n), q = q_poly(n);
                text_cells.push_back({std::to_string(n), p.human(), q.human()});
                rows.push_back({{"n", n}, {"P", poly_json(p)}, {"Q", poly_json(q)}});
                break;
            }
            case 2: {
                const auto [y, z] = yz_pair(n);
                text_cells.push_back({std::to_string(n), rendered_y(n, y), rendered_z(n, z)});
                rows.push_back({{"n", n}, {"Y", poly_json(y)}, {"Z", poly_json(z)}});
                break;
            }
            case 3: {
                const std::string f = factored_w(n);
                text_cells.push_back({std::to_string(n), f});
                rows.push_back({{"n", n}, {"factored", f}, {"coeffs", poly_json(w_poly(n))}});
                break;
            }
            default: {
                const Polynomial w = w_poly(n);
                text_cells.push_back({std::to_string(n), w.human(false)});
                rows.push_back({{"n", n}, {"W", poly_json(w)}});
                break;
            }
        }
    }

    std::ostringstream out;
    const TableSpec& spec = kTableSpecs[which - 1];
    switch (format) {
        case OutputFormat::text: {
            out << spec.header_text << "\n";
            for (const auto& row : text_cells) {
                for (size_t i = 0; i < row.size(); ++i) out << (i ? " | " : "") << row[i];
                out << "\n";
            }
            break;
        }
        case OutputFormat::csv: {
            out << spec.header_csv << "\n";
            for (const auto& row : text_cells) {
                for (size_t i = 0; i < row.size(); ++i)
                    out << (i ? "," : "") << csv_quote(row[i]);
                out << "\n";
            }
            break;
        }
        case OutputFormat::json:
            out << json{{"table", which}, {"rows", rows}}.dump(2) << "\n";
            break;
    }
    return out.str();
}

namespace {

long require_param(const std::optional<long>& v, const std::string& name,
                   const std::string& what) {
    if (!v) throw UsageError("compute " + what + " requires --" + name);
    return *v;
}

unsigned as_index(long v, const std::string& name) {
    if (v < 0) throw UsageError("--" + name + " must be nonnegative");
    return static_cast<unsigned>(v);
}

Polynomial parse_poly_arg(const std::string& csvlist, const std::string& name) {
    std::vector<std::string> parts;
    std::string cur;
    std::istringstream in(csvlist);
    while (std::getline(in, cur, ',')) parts.push_back(cur);
    if (parts.empty()) throw UsageError("--" + name + " needs a coefficient list");
    try {
        return Polynomial::from_coeff_strings(parts);
    } catch (const std::domain_error& e) {
        throw UsageError("--" + name + ": " + e.what());
    }
}

FamilyId parse_family(const std::string& name) {
    using Tag = FamilyId::Tag;
    if (name == "q") return {Tag::Q};
    if (name == "p") return {Tag::P};
    if (name == "v") return {Tag::V};
    if (name == "w") return {Tag::W};
    if (name == "y") return {Tag::Y};
    if (name == "z") return {Tag::Z};
    if (name == "chebt") return {Tag::ChebT};
    if (name == "chebu") return {Tag::ChebU};
    if (name == "qderiv") return {Tag::QDeriv};
    throw UsageError("unknown family: " + name);
}

std::string scalar_output(const std::string& what, const json& meta, const std::string& value,
                          OutputFormat format) {
    switch (format) {
        case OutputFormat::text: return value + "\n";
        case OutputFormat::csv: return "value\n" + csv_quote(value) + "\n";
        case OutputFormat::json: {
            json j = meta;
            j["what"] = what;
            j["value"] = value;
            return j.dump(2) + "\n";
        }
    }
    return {};
}

std::string poly_output(const std::string& what, const json& meta, const Polynomial& f,
                        OutputFormat format) {
    switch (format) {
        case OutputFormat::text: return poly_json(f).dump() + "\n";
        case OutputFormat::csv: {
            std::string out = "i,coefficient\n";
            const auto cs = f.coeff_strings();
            for (size_t i = 0; i < cs.size(); ++i)
                out += std::to_string(i) + "," + csv_quote(cs[i]) + "\n";
            return out;
        }
        case OutputFormat::json: {
            json j = meta;
            j["what"] = what;
            j["value"] = poly_json(f);
            return j.dump(2) + "\n";
        }
    }
    return {};
}

const char* reason_name(SquareReason r) {
    switch (r) {
        case SquareReason::negative_sign: return "negative-sign";
        case SquareReason::prime_witness: return "prime-witness";
        case SquareReason::pell_member: return "pell-member";
        case SquareReason::direct_integer_check: return "direct-integer-check";
    }
    return "?";
}

}  // namespace

std::string cmd_compute(const std::string& what, const ComputeParams& params,
                        OutputFormat format) {
    try {
        if (what == "q" || what == "p" || what == "v" || what == "w" || what == "y" ||
            what == "z") {
            const unsigned n = as_index(require_param(params.n, "n", what), "n");
            const Polynomial f = family_poly(parse_family(what), n);
            return poly_output(what, {{"n", n}}, f, format);
        }
        if (what == "qderiv") {
            const unsigned n = as_index(require_param(params.n, "n", what), "n");
            const unsigned k = as_index(require_param(params.k, "k", what), "k");
            return poly_output(what, {{"n", n}, {"k", k}}, q_deriv_poly(n, k), format);
        }
        if (what == "disc") {
            Polynomial f;
            json meta;
            if (params.f) {
                f = parse_poly_arg(*params.f, "f");
            } else {
                const unsigned n = as_index(require_param(params.n, "n", what), "n");
                FamilyId id = parse_family(params.family.value_or("q"));
                if (id.tag == FamilyId::Tag::QDeriv)
                    id.k = as_index(require_param(params.k, "k", what), "k");
                f = family_poly(id, n);
                meta = {{"family", params.family.value_or("q")}, {"n", n}};
            }
            return scalar_output(what, meta, discriminant(f).str(), format);
        }
        if (what == "resultant") {
            if (!params.f || !params.g)
                throw UsageError("compute resultant requires --f and --g coefficient lists");
            const Polynomial f = parse_poly_arg(*params.f, "f");
            const Polynomial g = parse_poly_arg(*params.g, "g");
            return scalar_output(what, {}, sylvester_resultant(f, g).str(), format);
        }
        if (what == "classify") {
            const unsigned n = as_index(require_param(params.n, "n", what), "n");
            const unsigned k = as_index(require_param(params.k, "k", what), "k");
            const SquareClassification c = classify_disc_square(k, n);
            json j{{"k", k},
                   {"n", n},
                   {"verdict", c.verdict == SquareVerdict::square ? "Square" : "NotSquare"},
                   {"reason", reason_name(c.reason)},
                   {"class", c.value_class},
                   {"decisive_value", c.decisive_value.str()}};
            if (c.sqrt_witness) j["sqrt_witness"] = c.sqrt_witness->str();
            if (c.witness_prime) j["witness_prime"] = c.witness_prime->get_str();
            if (c.pell_index) j["pell_index"] = *c.pell_index;
            switch (format) {
                case OutputFormat::text: {
                    std::ostringstream os;
                    os << j["verdict"].get<std::string>() << " (reason=" << reason_name(c.reason)
                       << ", class=" << c.value_class;
                    if (c.witness_prime) os << ", witness_prime=" << c.witness_prime->get_str();
                    if (c.pell_index) os << ", pell_index=" << *c.pell_index;
                    if (c.sqrt_witness) os << ", sqrt=" << c.sqrt_witness->str();
                    os << ")\n";
                    return os.str();
                }
                case OutputFormat::json: return j.dump(2) + "\n";
                case OutputFormat::csv:
                    return "k,n,verdict,reason,class\n" + std::to_string(k) + "," +
                           std::to_string(n) + "," + j["verdict"].get<std::string>() + "," +
                           reason_name(c.reason) + "," + std::to_string(c.value_class) + "\n";
            }
        }
        if (what == "nj") {
            const unsigned j = as_index(require_param(params.j, "j", what), "j");
            return scalar_output(what, {{"j", j}}, pell_n(j).get_str(), format);
        }
    } catch (const std::domain_error& e) {
        throw UsageError(e.what());
    }
    throw UsageError("unknown compute target: " + what);
}

int cmd_verify(const std::vector<std::string>& ids, std::optional<int> nmax,
               std::optional<int> kmax, OutputFormat format, unsigned jobs, std::ostream& out) {
    std::vector<VerificationReport> reports;
    try {
        if (ids.empty() || (ids.size() == 1 && ids[0] == "all")) {
            reports = verify_all(nmax, kmax, jobs);
        } else {
            for (const std::string& id : ids) reports.push_back(verify(id, nmax, kmax));
        }
    } catch (const UnknownIdentityError& e) {
        throw UsageError(e.what());
    } catch (const std::domain_error& e) {
        throw UsageError(e.what());
    }

    const bool ok = all_passed(reports);
    switch (format) {
        case OutputFormat::text: {
            for (const VerificationReport& r : reports) {
                out << (r.passed ? "PASS" : "FAIL") << "  " << r.id << "  (nmax=" << r.range.nmax;
                if (r.range.kmax) out << ", kmax=" << *r.range.kmax;
                out << ")\n";
                if (r.counterexample) {
                    out << "      counterexample at " << r.counterexample->params << "\n"
                        << "      lhs: " << r.counterexample->lhs << "\n"
                        << "      rhs: " << r.counterexample->rhs << "\n";
                }
                if (!r.note.empty()) out << "      note: " << r.note << "\n";
            }
            out << (ok ? "all checks passed" : "counterexample found") << " (" << reports.size()
                << " checks)\n";
            break;
        }
        case OutputFormat::json: {
            json j{{"all_passed", ok}, {"reports", json::array()}};
            for (const VerificationReport& r : reports) j["reports"].push_back(report_to_json(r));
            out << j.dump(2) << "\n";
            break;
        }
        case OutputFormat::csv: {
            out << "id,nmax,kmax,passed,params,lhs,rhs,elapsed_ms,note\n";
            for (const VerificationReport& r : reports) {
                out << r.id << "," << r.range.nmax << ","
                    << (r.range.kmax ? std::to_string(*r.range.kmax) : "") << ","
                    << (r.passed ? "true" : "false") << ",";
                if (r.counterexample)
                    out << csv_quote(r.counterexample->params) << ","
                        << csv_quote(r.counterexample->lhs) << ","
                        << csv_quote(r.counterexample->rhs);
                else
                    out << ",,";
                out << "," << r.elapsed.count() << "," << csv_quote(r.note) << "\n";
            }
            break;
        }
    }
    return ok ? 0 : 1;
}

}  // namespace pqpolys
