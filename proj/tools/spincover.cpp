// Batch front-end: class data, character tables, partition combinatorics,
// block reports, and the Broue isometry verification.
//
// Output is deterministic for a fixed invocation: partitions are ordered
// lexicographically, classes by type then tag, and table cells are assembled
// in row-major order regardless of the worker count.

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <thread>

#include "spincover/blocks.hpp"
#include "spincover/isometry.hpp"
#include "spincover/spin_sym.hpp"
#include "spincover/wreath.hpp"
#include "spincover/wreath_oracle.hpp"

using json = nlohmann::ordered_json;
using namespace spincover;

namespace {

constexpr const char* kSchema = "spincover/1";
constexpr int kExitUsage = 64;
constexpr int kExitResourceCap = 3;
constexpr int kExitVerificationFailure = 4;

std::string big_str(const BigInt& b) { return b.get_str(); }

std::string tag_str(Tag t) {
    switch (t) {
        case Tag::plus: return "plus";
        case Tag::minus: return "minus";
        default: return "unsplit";
    }
}

json wreath_type_json(const covers::WreathType& ty) {
    json arr = json::array();
    for (const auto& c : ty.parts) arr.push_back(partitions::to_string(c));
    return arr;
}

std::string cell(const CycloNum& v, bool decimal) {
    if (!decimal) return v.to_string();
    auto z = v.to_complex();
    std::ostringstream out;
    out.precision(12);
    out << z.real();
    if (z.imag() != 0) out << (z.imag() > 0 ? "+" : "") << z.imag() << "i";
    return out.str();
}

void emit(const json& doc, const std::string& format) {
    if (format == "pretty") std::cout << doc.dump(2) << "\n";
    else std::cout << doc.dump() << "\n";
}

// Optional table cache keyed by the command line, under SPINCOVER_CACHE_DIR.
std::optional<std::filesystem::path> cache_path(const std::string& key) {
    const char* dir = std::getenv("SPINCOVER_CACHE_DIR");
    if (!dir || !*dir) return std::nullopt;
    std::filesystem::create_directories(dir);
    std::string safe = key;
    for (char& c : safe)
        if (!std::isalnum(static_cast<unsigned char>(c))) c = '_';
    return std::filesystem::path(dir) / (safe + ".json");
}

int label_variant_order(int v) { return v == 0 ? 0 : (v > 0 ? 1 : 2); }

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact spin character tables of double covers and their local subgroups"};
    app.require_subcommand(1);
    std::string format = "json";
    app.add_option("--format", format, "Output format: json, csv, pretty")
        ->check(CLI::IsMember({"json", "csv", "pretty"}));
    int jobs = 1;
    app.add_option("--jobs", jobs, "Worker threads for class-pair verification")->check(CLI::Range(1, 64));
    long maxGroupOrder = 1000000;
    app.add_option("--max-group-order", maxGroupOrder, "Refuse enumerations beyond this order");
    unsigned seed = 1;
    app.add_option("--seed", seed, "Seed for randomized self tests");

    // ---- classes ----
    auto* classesCmd = app.add_subcommand("classes", "Conjugacy class data");
    std::string classesKind;
    int cn = 0, cp = 3, ct = 1;
    classesCmd->add_option("kind", classesKind, "sym or wreath")->required()
        ->check(CLI::IsMember({"sym", "wreath"}));
    classesCmd->add_option("--n", cn, "Degree n for the sym side");
    classesCmd->add_option("--p", cp, "Odd prime p");
    classesCmd->add_option("--t", ct, "Number of blocks t");

    // ---- chartable ----
    auto* tableCmd = app.add_subcommand("chartable", "Spin character tables");
    std::string tableKind, tableCover = "-";
    int tn = 0, tp = 3, tt = 1;
    bool withOracle = false, withDecimal = false;
    tableCmd->add_option("kind", tableKind, "sym or wreath")->required()
        ->check(CLI::IsMember({"sym", "wreath"}));
    tableCmd->add_option("--n", tn, "Degree n for the sym side");
    tableCmd->add_option("--cover", tableCover, "Cover type + or - (labels only; the table is shared)")
        ->check(CLI::IsMember({"+", "-"}));
    tableCmd->add_option("--p", tp, "Odd prime p");
    tableCmd->add_option("--t", tt, "Number of blocks t");
    tableCmd->add_flag("--oracle", withOracle, "Also run the matrix oracle and report differences");
    tableCmd->add_flag("--decimal", withDecimal, "Add a decimal approximation table");

    // ---- partition combinatorics ----
    auto* coreCmd = app.add_subcommand("core", "q-core / quotient / weight / sign of a partition");
    auto* barcoreCmd = app.add_subcommand("barcore", "p-bar core of a strict partition");
    auto* barquotCmd = app.add_subcommand("barquot", "p-bar quotient of a strict partition");
    std::string partArg;
    int pq = 3;
    for (auto* cmd : {coreCmd, barcoreCmd, barquotCmd}) {
        cmd->add_option("partition", partArg, "Partition as a comma list, e.g. \"4,2\"")->required();
        cmd->add_option("--q,--p", pq, "Hook/bar length (odd for bars)");
    }

    // ---- blocks ----
    auto* blocksCmd = app.add_subcommand("blocks", "p-block descriptors and member lists");
    int bn = 0, bp = 3;
    std::string bside = "sym";
    blocksCmd->add_option("--n", bn, "Degree n")->required();
    blocksCmd->add_option("--p", bp, "Odd prime p")->required();
    blocksCmd->add_option("--side", bside, "sym or alt")->check(CLI::IsMember({"sym", "alt"}));

    // ---- verify-isometry ----
    auto* verifyCmd = app.add_subcommand("verify-isometry", "Check the Broue axioms exactly");
    int vn = 0, vp = 3;
    std::string vcore, vside = "sym";
    bool vbrauer = false;
    verifyCmd->add_option("--n", vn, "Degree n")->required();
    verifyCmd->add_option("--p", vp, "Odd prime p")->required();
    verifyCmd->add_option("--core", vcore, "Bar core as a comma list (empty for the principal-type block)");
    verifyCmd->add_option("--side", vside, "Source side: sym or alt")->check(CLI::IsMember({"sym", "alt"}));
    verifyCmd->add_flag("--brauer", vbrauer, "Verify the composition with the Brauer correspondent");

    // ---- selftest ----
    auto* selftestCmd = app.add_subcommand("selftest", "Quick internal consistency battery");

    for (auto* sc : {classesCmd, tableCmd, coreCmd, barcoreCmd, barquotCmd, blocksCmd, verifyCmd,
                     selftestCmd})
        sc->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : kExitUsage;
    }

    try {
        // ------------------------------------------------------------------
        if (classesCmd->parsed()) {
            json doc{{"schema", kSchema}, {"command", "classes"}};
            if (classesKind == "sym") {
                if (cn < 1 || cn > 20) throw CLI::ValidationError("--n", "need 1 <= n <= 20");
                doc["group"] = "sym";
                doc["n"] = cn;
                json arr = json::array();
                for (const auto& ci : covers::sym_classes(cn)) {
                    arr.push_back({{"type", partitions::to_string(ci.label.type)},
                                   {"tag", tag_str(ci.label.tag)},
                                   {"size", big_str(ci.size)},
                                   {"centralizer", big_str(ci.centralizer)},
                                   {"pRegular", covers::is_p_regular_type(ci.label.type, cp)}});
                }
                doc["p"] = cp;
                doc["classes"] = arr;
            } else {
                double order = 2 * covers::factorial(ct).get_d() *
                               std::pow(static_cast<double>(cp) * (cp - 1), ct);
                if (order > static_cast<double>(maxGroupOrder))
                    throw std::length_error("group order exceeds --max-group-order");
                WreathCache cache;
                WreathContext& W = cache.get(cp, ct);
                doc["group"] = "wreath";
                doc["p"] = cp;
                doc["t"] = ct;
                json arr = json::array();
                for (const auto& ci : W.classes()) {
                    arr.push_back({{"type", wreath_type_json(ci.type)},
                                   {"tag", tag_str(ci.tag)},
                                   {"size", big_str(ci.size)},
                                   {"centralizer", big_str(ci.centralizer)},
                                   {"pRegular", ci.pRegular}});
                }
                doc["classes"] = arr;
            }
            emit(doc, format);
            return 0;
        }

        // ------------------------------------------------------------------
        if (tableCmd->parsed()) {
            std::ostringstream keyStream;
            keyStream << "chartable_" << tableKind << "_n" << tn << "_p" << tp << "_t" << tt
                      << "_cover" << (tableCover == "+" ? "p" : "m") << "_dec" << withDecimal;
            auto cachePath = cache_path(keyStream.str());
            json doc;
            bool cached = false;
            if (cachePath && std::filesystem::exists(*cachePath) && !withOracle) {
                std::ifstream in(*cachePath);
                in >> doc;
                cached = true;
            }
            if (!cached) {
                doc = json{{"schema", kSchema}, {"command", "chartable"}};
                if (tableKind == "sym") {
                    if (tn < 1 || tn > 14) throw CLI::ValidationError("--n", "need 1 <= n <= 14");
                    doc["group"] = "sym";
                    doc["n"] = tn;
                    doc["cover"] = tableCover;
                    SpinSymTable T;
                    auto labels = sym_spin_labels(tn);
                    auto classes = covers::sym_classes(tn);
                    json rows = json::array(), cols = json::array(), entries = json::array();
                    for (auto& l : labels)
                        rows.push_back({{"lambda", partitions::to_string(l.lambda)}, {"variant", l.variant}});
                    for (auto& c : classes)
                        cols.push_back(partitions::to_string(c.label.type) + ":" + tag_str(c.label.tag));
                    for (auto& l : labels) {
                        json row = json::array();
                        for (auto& c : classes)
                            row.push_back(
                                cell(T.value(l.lambda, l.variant, c.label.type, c.label.tag), false));
                        entries.push_back(std::move(row));
                    }
                    doc["characters"] = rows;
                    doc["classes"] = cols;
                    doc["values"] = entries;
                    if (withDecimal) {
                        json dec = json::array();
                        for (auto& l : labels) {
                            json row = json::array();
                            for (auto& c : classes)
                                row.push_back(
                                    cell(T.value(l.lambda, l.variant, c.label.type, c.label.tag), true));
                            dec.push_back(std::move(row));
                        }
                        doc["decimals"] = dec;
                    }
                } else {
                    double order = 2 * covers::factorial(tt).get_d() *
                                   std::pow(static_cast<double>(tp) * (tp - 1), tt);
                    if (order > static_cast<double>(maxGroupOrder))
                        throw std::length_error("group order exceeds --max-group-order");
                    doc["group"] = "wreath";
                    doc["p"] = tp;
                    doc["t"] = tt;
                    WreathCache cache;
                    WreathContext& W = cache.get(tp, tt);
                    auto labels = W.labels();
                    json rows = json::array(), cols = json::array(), entries = json::array();
                    for (auto& l : labels)
                        rows.push_back({{"lambda", partitions::to_string(l.lambda)}, {"variant", l.variant}});
                    for (auto& ci : W.classes()) {
                        std::string name;
                        for (auto& c : ci.type.parts) name += "[" + partitions::to_string(c) + "]";
                        cols.push_back(name + ":" + tag_str(ci.tag));
                    }
                    for (auto& l : labels) {
                        const auto& tab = W.character(l);
                        json row = json::array();
                        for (auto& ci : W.classes()) row.push_back(cell(tab[ci.classId], false));
                        entries.push_back(std::move(row));
                    }
                    doc["characters"] = rows;
                    doc["classes"] = cols;
                    doc["values"] = entries;
                    if (withDecimal) {
                        json dec = json::array();
                        for (auto& l : labels) {
                            const auto& tab = W.character(l);
                            json row = json::array();
                            for (auto& ci : W.classes()) row.push_back(cell(tab[ci.classId], true));
                            dec.push_back(std::move(row));
                        }
                        doc["decimals"] = dec;
                    }
                    if (withOracle) {
                        WreathOracle O(W);
                        json diffs = json::array();
                        for (auto& l : labels) {
                            if (l.variant < 0) continue;
                            auto otab = O.table(l);
                            const auto& ftab = W.character(l);
                            auto matches = [&](bool twist) {
                                for (auto& ci : W.classes()) {
                                    CycloNum o = otab[ci.classId];
                                    if (twist &&
                                        perms::parity(W.E().class_rep(ci.classId).perm) < 0)
                                        o = -o;
                                    if (!(o == ftab[ci.classId])) return false;
                                }
                                return true;
                            };
                            if (!matches(false) && !(l.variant != 0 && matches(true)))
                                diffs.push_back(partitions::to_string(l.lambda));
                        }
                        doc["oracleDiffs"] = diffs;
                        if (!diffs.empty()) {
                            emit(doc, format);
                            return kExitVerificationFailure;
                        }
                    }
                }
                if (cachePath && !withOracle) {
                    std::ofstream out(*cachePath);
                    out << doc.dump();
                }
            }
            if (format == "csv") {
                std::cout << "character";
                for (auto& c : doc["classes"]) std::cout << "," << c.get<std::string>();
                std::cout << "\n";
                for (size_t i = 0; i < doc["characters"].size(); ++i) {
                    auto& l = doc["characters"][i];
                    std::cout << l["lambda"].get<std::string>() << "/" << l["variant"].get<int>();
                    for (auto& v : doc["values"][i]) std::cout << ",\"" << v.get<std::string>() << "\"";
                    std::cout << "\n";
                }
            } else {
                emit(doc, format);
            }
            return 0;
        }

        // ------------------------------------------------------------------
        if (coreCmd->parsed() || barcoreCmd->parsed() || barquotCmd->parsed()) {
            Partition lambda = partitions::parse_partition(partArg);
            json doc{{"schema", kSchema}};
            if (coreCmd->parsed()) {
                auto cq = partitions::core_quotient(lambda, pq);
                doc["command"] = "core";
                doc["partition"] = partitions::to_string(lambda);
                doc["q"] = pq;
                doc["core"] = partitions::to_string(cq.core);
                json quot = json::array();
                for (auto& c : cq.quotient) quot.push_back(partitions::to_string(c));
                doc["quotient"] = quot;
                doc["weight"] = cq.weight;
                doc["sign"] = cq.sign;
            } else {
                if (!partitions::is_strict(lambda))
                    throw CLI::ValidationError("partition", "bars need a strict partition");
                auto bc = partitions::bar_core_quotient(lambda, pq);
                doc["command"] = barcoreCmd->parsed() ? "barcore" : "barquot";
                doc["partition"] = partitions::to_string(lambda);
                doc["p"] = pq;
                doc["core"] = partitions::to_string(bc.core);
                doc["weight"] = bc.weight;
                doc["sign"] = bc.sign;
                if (barquotCmd->parsed()) doc["quotient"] = partitions::to_string(bc.quotient);
            }
            emit(doc, format);
            return 0;
        }

        // ------------------------------------------------------------------
        if (blocksCmd->parsed()) {
            if (bn < 1 || bn > 16) throw CLI::ValidationError("--n", "need 1 <= n <= 16");
            Side side = bside == "sym" ? Side::sym : Side::alt;
            json doc{{"schema", kSchema}, {"command", "blocks"}, {"n", bn}, {"p", bp}, {"side", bside}};
            std::vector<BlockDescriptor> descriptors;
            for (const auto& lambda : partitions::strict_partitions(bn)) {
                auto B = blocks::block_of(lambda, bp, side);
                bool seen = false;
                for (auto& D : descriptors)
                    if (D == B) seen = true;
                if (!seen) {
                    descriptors.push_back(B);
                    if (B.weight == 0 && B.signVariant != 0) {
                        BlockDescriptor Bm = B;
                        Bm.signVariant = -1;
                        descriptors.push_back(Bm);
                    }
                }
            }
            json arr = json::array();
            for (auto& B : descriptors) {
                json d{{"core", partitions::to_string(B.barCore)},
                       {"weight", B.weight},
                       {"signVariant", B.signVariant},
                       {"abelianDefect", B.abelian_defect()}};
                auto brauer = blocks::brauer_data(B);
                d["defectGroup"] = brauer.defectGroup;
                d["brauerIdempotent"] = brauer.correspondentIdempotent;
                json members = json::array();
                for (auto& c : blocks::block_characters(B))
                    members.push_back({{"lambda", partitions::to_string(c.lambda)}, {"variant", c.variant}});
                d["characters"] = members;
                arr.push_back(std::move(d));
            }
            doc["blocks"] = arr;
            emit(doc, format);
            return 0;
        }

        // ------------------------------------------------------------------
        if (verifyCmd->parsed()) {
            if (vn < 1 || vn > 16) throw CLI::ValidationError("--n", "need 1 <= n <= 16");
            auto t0 = std::chrono::steady_clock::now();
            StrictPartition core = partitions::parse_partition(vcore);
            Side side = vside == "sym" ? Side::sym : Side::alt;
            WreathCache cache;
            SpinSymTable spin;
            auto I = isometry::build_map(vn, vp, core, side);
            double order = 2 * covers::factorial(I.w).get_d() *
                           std::pow(static_cast<double>(vp) * (vp - 1), I.w);
            if (order > static_cast<double>(maxGroupOrder))
                throw std::length_error("local group order exceeds --max-group-order");
            isometry::VerifyReport R;
            if (vbrauer) {
                if (side != Side::sym || partitions::sigma(core) != 1)
                    throw CLI::ValidationError("--brauer", "composition applies to sym-side positive cores");
                isometry::ComposedCorrespondent C(I, spin, cache);
                R = C.verify();
            } else {
                WreathContext& W = cache.get(vp, I.w);
                isometry::SideTable src = side == Side::sym ? isometry::sym_source_table(I, spin)
                                                            : isometry::alt_source_table(I, spin);
                isometry::SideTable tgt = isometry::wreath_target_table(I, W);
                R = isometry::verify_pairing(I, src, tgt, jobs);
            }
            auto t1 = std::chrono::steady_clock::now();
            json doc{{"schema", kSchema},
                     {"command", "verify-isometry"},
                     {"n", vn},
                     {"p", vp},
                     {"core", partitions::to_string(core)},
                     {"side", vside},
                     {"brauerComposed", vbrauer},
                     {"weight", I.w},
                     {"targetEvenPart", I.targetAlt}};
            json entries = json::array();
            for (auto& e : I.entries) {
                entries.push_back({{"source", partitions::to_string(e.source.lambda)},
                                   {"sourceVariant", e.source.variant},
                                   {"sign", e.sign},
                                   {"target", partitions::to_string(e.target.lambda)},
                                   {"targetVariant", e.target.variant}});
            }
            doc["map"] = entries;
            doc["pairsChecked"] = R.pairsChecked;
            doc["violations"] = R.violations;
            doc["runtimeSeconds"] = std::chrono::duration<double>(t1 - t0).count();
            emit(doc, format);
            return R.ok() ? 0 : kExitVerificationFailure;
        }

        // ------------------------------------------------------------------
        if (selftestCmd->parsed()) {
            std::mt19937 rng(seed);
            json doc{{"schema", kSchema}, {"command", "selftest"}, {"seed", seed}};
            json checks = json::array();
            auto record = [&](const std::string& name, bool ok) {
                checks.push_back({{"check", name}, {"ok", ok}});
                return ok;
            };
            bool all = true;
            // cyclotomic arithmetic
            bool cy = true;
            for (int q = 1; q <= 25; q += 2) {
                CycloNum s = CycloNum::sqrt_odd(q);
                cy = cy && (s * s == CycloNum(q));
            }
            all &= record("gauss sums square back", cy);
            // core order independence on random strict partitions
            bool ci = true;
            for (int iter = 0; iter < 50; ++iter) {
                auto all8 = partitions::strict_partitions(3 + static_cast<int>(rng() % 10));
                const auto& lam = all8[rng() % all8.size()];
                auto bc = partitions::bar_core_quotient(lam, 3);
                ci = ci && (partitions::size_of(lam) ==
                            partitions::size_of(bc.core) + 3 * bc.weight);
            }
            all &= record("bar core weights", ci);
            // spin orthogonality at n = 5
            {
                SpinSymTable T;
                bool ortho = true;
                auto labels = sym_spin_labels(5);
                for (size_t i = 0; i < labels.size(); ++i)
                    for (size_t j = i; j < labels.size(); ++j) {
                        CycloNum sum;
                        for (auto& c : covers::sym_classes(5))
                            sum += CycloNum(Rational(c.size)) *
                                   T.value(labels[i].lambda, labels[i].variant, c.label.type, c.label.tag) *
                                   T.value(labels[j].lambda, labels[j].variant, c.label.type, c.label.tag)
                                       .conjugate();
                        ortho = ortho && (sum == CycloNum(Rational(i == j ? 240 : 0)));
                    }
                all &= record("spin orthogonality n=5", ortho);
            }
            // isometry smoke case
            {
                WreathCache cache;
                SpinSymTable spin;
                auto I = isometry::build_I(3, 3, {});
                all &= record("broue isometry (3, empty, 1)",
                              isometry::verify_broue(I, spin, cache).ok());
            }
            doc["checks"] = checks;
            doc["ok"] = all;
            emit(doc, format);
            return all ? 0 : kExitVerificationFailure;
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::length_error& e) {
        std::cerr << "resource cap exceeded: " << e.what() << "\n";
        return kExitResourceCap;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::domain_error& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 70;
    }
    return 0;
}
