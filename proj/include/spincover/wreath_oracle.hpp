#pragma once

// Brute-force matrix oracle for the wreath character tables: builds the
// representations of the construction explicitly (monomial induced zeta_0,
// its associator from the eigenspace projectors, the T swap operators,
// Pauli-model Clifford factors, seminormal Sym matrices), glues them through
// the tensor-action recipe, and takes traces.  Test-only code: everything is
// validated against the closed-form path entry by entry.

#include "spincover/cyclo_matrix.hpp"
#include "spincover/wreath.hpp"

namespace spincover {

inline int oracle_sym_dim(const Partition& lambda) {
    int n = partitions::size_of(lambda);
    BigInt nf = 1;
    for (int k = 2; k <= n; ++k) nf *= k;
    BigInt hooks = 1;
    for (size_t r = 0; r < lambda.size(); ++r) {
        for (int c = 0; c < lambda[r]; ++c) {
            int arm = lambda[r] - c - 1;
            int leg = 0;
            for (size_t rr = r + 1; rr < lambda.size(); ++rr)
                if (lambda[rr] > c) ++leg;
            hooks *= arm + leg + 1;
        }
    }
    BigInt dim = nf / hooks;
    return static_cast<int>(dim.get_si());
}

class WreathOracle {
public:
    explicit WreathOracle(WreathContext& W) : W_(W) {
        build_zeta0_rep();
    }

    // Trace table of chi^{label} on every class of the full group, computed by
    // matrices + the same class-fusion induction.
    std::vector<CycloNum> table(const WreathCharLabel& label) {
        auto [H, gens] = subgroupH(label);
        auto mats = generator_matrices(label, gens, *H);
        std::vector<CycloNum> hvals(H->num_classes());
        for (int c = 0; c < H->num_classes(); ++c) {
            CMatrix rep = CMatrix::identity(mats[0].rows());
            for (int g : H->word_for(H->class_rep(c))) rep = rep * mats[g];
            hvals[c] = rep.trace();
        }
        const auto& E = W_.E();
        std::vector<CycloNum> out(E.num_classes());
        for (int c = 0; c < H->num_classes(); ++c) {
            if (hvals[c].is_zero()) continue;
            int big = E.class_of(H->class_rep(c));
            out[big] += CycloNum(Rational(1) / Rational(H->centralizer_order(c))) * hvals[c];
        }
        for (int c = 0; c < E.num_classes(); ++c) {
            out[c] *= CycloNum(Rational(E.centralizer_order(c)));
            out[c].minimize_conductor();
        }
        return out;
    }

    // Structural identities of the building blocks (Lemma-level checks).
    bool associator_involutive() const { return (S_ * S_) == CMatrix::identity(S_.rows()); }

    bool associator_intertwines() {
        const auto& np1 = *np1_;
        for (size_t i = 0; i < np1.elements().size(); ++i) {
            const CoverElt& g = np1.elements()[i];
            CMatrix lhs = S_ * rho0(g) * S_;
            CMatrix rhs = perms::parity(g.perm) == 1 ? rho0(g) : CMatrix::scalar(S_.rows(), CycloNum(-1)) * rho0(g);
            if (!(lhs == rhs)) return false;
        }
        return true;
    }

    // ((S x T) (T x S))^3 = 1 on U x U x U.
    bool braid_identity() {
        int d = S_.rows();
        CMatrix T = tmatrix();
        CMatrix SxT = CMatrix::kronecker(eigenS(), T);
        CMatrix TxS = CMatrix::kronecker(T, eigenS());
        CMatrix M = SxT * TxS;
        CMatrix M3 = M * M * M;
        return M3 == CMatrix::identity(d * d * d);
    }

    // Trace of the Exten representation against the closed form, over all of
    // N~^t x| S_t reachable as (xN, beta) with xN in the enumerated group.
    bool exten_trace_matches(int maxChecks = 400) {
        if (W_.t < 1) return true;
        // Matrices of the extension rep on U^{ox t}.
        int checks = 0;
        for (const auto& x : W_.E().elements()) {
            auto [xN, s] = W_.split_ns(x);
            Perm beta = W_.beta_of(x);
            CMatrix rep = ext_matrix(xN) * ext_perm_matrix(beta);
            std::vector<int> blocks(W_.t);
            std::iota(blocks.begin(), blocks.end(), 0);
            CycloNum direct = W_.exten(+1, xN, beta, blocks);
            if (!(rep.trace() == direct)) return false;
            if (++checks >= maxChecks) break;
        }
        return true;
    }

private:
    WreathContext& W_;
    const EnumeratedCover* np1_ = nullptr;
    std::vector<CMatrix> rho0_;  // zeta_0 matrices indexed by np1 element index
    CMatrix S_;                  // associator of zeta_0 (original basis)
    CMatrix basis_, basisInv_;   // eigenbasis of S_, U+ columns first
    int dimPlus_ = 0;

    const CMatrix& rho0(const CoverElt& g) const { return rho0_[np1_->index_of(g)]; }

    CMatrix eigenS() const {  // S in eigen-coordinates
        int d = S_.rows();
        CMatrix m(d, d);
        for (int i = 0; i < d; ++i) m.at(i, i) = CycloNum(i < dimPlus_ ? 1 : -1);
        return m;
    }

    void build_zeta0_rep() {
        np1_ = &W_.np1();
        const auto& G = W_.G();
        int p = W_.p;
        // Coset representatives: powers of the y1 lift.
        CoverElt b = W_.np_gen_y1();
        std::vector<CoverElt> reps;
        CoverElt cur = G.identity();
        for (int k = 0; k < p - 1; ++k) {
            reps.push_back(cur);
            cur = G.multiply(cur, b);
        }
        CoverElt oy0 = W_.anchor_a();
        auto psi = [&](const CoverElt& h) -> std::optional<CycloNum> {
            const Perm& q = h.perm;
            long m = q[0] % p;
            for (int j = 0; j < p; ++j)
                if (q[j] != (j + m) % p) return std::nullopt;
            for (size_t j = p; j < q.size(); ++j)
                if (q[j] != static_cast<int>(j)) return std::nullopt;
            CycloNum v = CycloNum::root_of_unity(p, m);
            return (G.power(oy0, m) == h) ? v : -v;
        };
        rho0_.clear();
        for (const auto& g : np1_->elements()) {
            CMatrix m(p - 1, p - 1);
            for (int r = 0; r < p - 1; ++r) {
                for (int c = 0; c < p - 1; ++c) {
                    CoverElt h = G.multiply(G.inverse(reps[r]), G.multiply(g, reps[c]));
                    if (auto v = psi(h)) m.at(r, c) = *v;
                }
            }
            rho0_.push_back(std::move(m));
        }
        // Associator via the isotypic projectors of zeta-bar_0^{+-}.
        const auto& npA = W_.npA();
        int d = p - 1;
        CMatrix Pp(d, d), Pm(d, d);
        CycloNum scale = CycloNum(Rational((p - 1) / 2)) / CycloNum(Rational(BigInt(npA.order())));
        for (const auto& h : npA.elements()) {
            CMatrix m = rho0(h);
            Pp = Pp + W_.zetaBar0(+1, h).conjugate() * m;
            Pm = Pm + W_.zetaBar0(-1, h).conjugate() * m;
        }
        Pp = scale * Pp;
        Pm = scale * Pm;
        S_ = Pp - Pm;
        // Eigenbasis: columns spanning U+ then U-.
        auto plusBasis = Pp.column_space_basis();
        auto minusBasis = Pm.column_space_basis();
        dimPlus_ = static_cast<int>(plusBasis.size());
        basis_ = CMatrix(d, d);
        for (int c = 0; c < d; ++c) {
            const auto& v = c < dimPlus_ ? plusBasis[c] : minusBasis[c - dimPlus_];
            for (int r = 0; r < d; ++r) basis_.at(r, c) = v[r];
        }
        basisInv_ = basis_.inverse();
    }

    // rho0 in eigen-coordinates.
    CMatrix rho0_eigen(const CoverElt& g) const { return basisInv_ * rho0(g) * basis_; }

    // The T swap on U ox U in eigen-coordinates: u_a ox u_b -> eta (u_b ox u_a).
    CMatrix tmatrix() const {
        int d = S_.rows();
        CMatrix T(d * d, d * d);
        for (int a = 0; a < d; ++a)
            for (int b = 0; b < d; ++b) {
                int eta = (a >= dimPlus_ && b >= dimPlus_) ? -1 : 1;
                T.at(b * d + a, a * d + b) = CycloNum(eta);
            }
        return T;
    }

    // Extension-rep matrix of xN (cover element of N~^t) on U^{ox t}.
    CMatrix ext_matrix(const CoverElt& xN) {
        int t = W_.t, p = W_.p;
        int d = S_.rows();
        // Decompose into per-block components with slack handling.
        CMatrix total = CMatrix::identity(ipow(d, t));
        CoverElt probe = W_.G().identity();
        for (int b = 0; b < t; ++b) {
            Perm local(p);
            for (int q = 0; q < p; ++q) local[q] = xN.perm[b * p + q] - b * p;
            CoverElt u = W_.embed_np_pub(local, b);
            probe = W_.G().multiply(probe, u);
            CoverElt u0 = W_.shift_to_block0_pub(u, b);
            bool odd = perms::parity(local) == -1;
            // slot matrix with S-twists on earlier slots when u is odd
            CMatrix m = CMatrix::identity(1);
            for (int slot = 0; slot < t; ++slot) {
                CMatrix piece;
                if (slot < b) piece = odd ? eigenS() : CMatrix::identity(d);
                else if (slot == b) piece = rho0_eigen(u0);
                else piece = CMatrix::identity(d);
                m = CMatrix::kronecker(m, piece);
            }
            total = total * m;
        }
        if (probe.perm != xN.perm) throw std::logic_error("oracle: component mismatch");
        if (probe.sign != xN.sign) total = CycloNum(-1) * total;
        return total;
    }

    // Matrix of the S_t part via the T_j generators.
    CMatrix ext_perm_matrix(const Perm& beta) {
        int t = W_.t;
        int d = S_.rows();
        CMatrix total = CMatrix::identity(ipow(d, t));
        for (int letter : perms::canonical_word(beta)) total = total * tj_matrix(letter + 1, t, d);
        return total;
    }

    CMatrix tj_matrix(int j, int t, int d) {
        // S on every slot except j-1, j (0-based j-1, j), T there.
        CMatrix m = CMatrix::identity(1);
        for (int slot = 0; slot < t; ++slot) {
            if (slot == j - 1) {
                m = CMatrix::kronecker(m, tmatrix());
                ++slot;  // consumed two slots
                continue;
            }
            m = CMatrix::kronecker(m, eigenS());
        }
        return m;
    }

    static int ipow(int b, int e) {
        int r = 1;
        while (e-- > 0) r *= b;
        return r;
    }

    // ----- glued representation per label ---------------------------------

    struct OracleFactor {
        bool selfAssoc;
        int dim;
        std::vector<int> blocks;  // block indices of this factor
        // generator matrix for a group generator supported in this factor
        std::function<CMatrix(const CoverElt&)> gen;
        CMatrix assoc;  // associator (identity when not self-associate)
    };

    std::pair<std::shared_ptr<EnumeratedCover>, std::vector<CoverElt>> subgroupH(
        const WreathCharLabel& label) {
        std::vector<CoverElt> gens = W_.subgroup_generators(label.lambda);
        auto H = std::make_shared<EnumeratedCover>(W_.G_ptr(), gens);
        return {H, H->generators()};
    }

    // Spin representation matrices of the abstract minus-cover S~_m, m <= 3.
    std::vector<CMatrix> xi_rep(const StrictPartition& lambda0, int variant) {
        int m = partitions::size_of(lambda0);
        std::vector<CMatrix> gens;  // images of t_1 .. t_{m-1}
        CycloNum i = CycloNum::i();
        if (lambda0 == StrictPartition{1}) {
            // trivial spin character of S~_1, no generators
        } else if (lambda0 == StrictPartition{2}) {
            CMatrix g(1, 1);
            g.at(0, 0) = variant > 0 ? i : -i;
            gens.push_back(g);
        } else if (lambda0 == StrictPartition{2, 1}) {
            CMatrix g1(1, 1), g2(1, 1);
            g1.at(0, 0) = variant > 0 ? i : -i;
            g2.at(0, 0) = variant > 0 ? -i : i;
            gens.push_back(g1);
            gens.push_back(g2);
        } else if (lambda0 == StrictPartition{3}) {
            CMatrix X(2, 2), Y(2, 2), Z(2, 2);
            X.at(0, 1) = CycloNum(1); X.at(1, 0) = CycloNum(1);
            Y.at(0, 1) = -i; Y.at(1, 0) = i;
            Z.at(0, 0) = CycloNum(1); Z.at(1, 1) = CycloNum(-1);
            CycloNum c = i / CycloNum::sqrt2();
            gens.push_back(c * (X + Y));
            gens.push_back(c * (Y + Z));
        } else {
            throw std::domain_error("oracle: spin representation beyond m = 3 not built");
        }
        (void)m;
        return gens;
    }

    CMatrix xi_assoc(const StrictPartition& lambda0) {
        if (lambda0 == StrictPartition{1}) return CMatrix::identity(1);
        if (lambda0 == StrictPartition{3}) {
            CycloNum i = CycloNum::i();
            CMatrix X(2, 2), Y(2, 2), Z(2, 2);
            X.at(0, 1) = CycloNum(1); X.at(1, 0) = CycloNum(1);
            Y.at(0, 1) = -i; Y.at(1, 0) = i;
            Z.at(0, 0) = CycloNum(1); Z.at(1, 1) = CycloNum(-1);
            CycloNum c = CycloNum(1) / CycloNum::sqrt_odd(3);
            return c * (X - Y + Z);
        }
        throw std::domain_error("oracle: associator request for a pair label");
    }

    // Pauli-model C_n matrices (dim 2^{floor(n/2)}); for n odd the last
    // generator is +Z^{ox k}, which realizes the plus character functional.
    std::vector<CMatrix> clifford_gens(int n) {
        CycloNum i = CycloNum::i();
        CMatrix X(2, 2), Y(2, 2), Z(2, 2), I2 = CMatrix::identity(2);
        X.at(0, 1) = CycloNum(1); X.at(1, 0) = CycloNum(1);
        Y.at(0, 1) = -i; Y.at(1, 0) = i;
        Z.at(0, 0) = CycloNum(1); Z.at(1, 1) = CycloNum(-1);
        int k = n / 2;
        std::vector<CMatrix> gens;
        for (int g = 1; g <= n; ++g) {
            CMatrix m = CMatrix::identity(1);
            int pairIdx = (g - 1) / 2;
            for (int slot = 0; slot < k; ++slot) {
                if (g == n && n % 2 == 1) m = CMatrix::kronecker(m, Z);
                else if (slot < pairIdx) m = CMatrix::kronecker(m, Z);
                else if (slot == pairIdx) m = CMatrix::kronecker(m, (g % 2 == 1) ? X : Y);
                else m = CMatrix::kronecker(m, I2);
            }
            gens.push_back(m);
        }
        return gens;
    }

    // Seminormal matrices of Sym_lambda for the adjacent transpositions.
    std::vector<CMatrix> sym_rep(const Partition& lambda);

    std::vector<CMatrix> generator_matrices(const WreathCharLabel& label,
                                            const std::vector<CoverElt>& gens,
                                            const EnumeratedCover& H);
};

// ---------------------------------------------------------------------------
// Seminormal form.

inline std::vector<CMatrix> WreathOracle::sym_rep(const Partition& lambda) {
    int n = partitions::size_of(lambda);
    // Enumerate standard tableaux as vectors cellOf[entry] = (row, col).
    struct Tab {
        std::vector<std::pair<int, int>> cell;  // 0-based, indexed by entry-1
    };
    std::vector<Tab> tabs;
    std::vector<int> rowFill(lambda.size(), 0);
    Tab cur;
    cur.cell.resize(n);
    auto rec = [&](auto&& self, int entry) -> void {
        if (entry > n) {
            tabs.push_back(cur);
            return;
        }
        for (size_t r = 0; r < lambda.size(); ++r) {
            if (rowFill[r] >= lambda[r]) continue;
            if (r > 0 && rowFill[r - 1] <= rowFill[r]) continue;
            cur.cell[entry - 1] = {static_cast<int>(r), rowFill[r]};
            rowFill[r]++;
            self(self, entry + 1);
            rowFill[r]--;
        }
    };
    if (n > 0) rec(rec, 1);
    else tabs.push_back(cur);
    int dim = static_cast<int>(tabs.size());
    auto indexOf = [&](const Tab& t) {
        for (int i = 0; i < dim; ++i)
            if (tabs[i].cell == t.cell) return i;
        return -1;
    };
    std::vector<CMatrix> gens;
    for (int k = 1; k < n; ++k) {
        CMatrix m(dim, dim);
        for (int i = 0; i < dim; ++i) {
            auto [r1, c1] = tabs[i].cell[k - 1];
            auto [r2, c2] = tabs[i].cell[k];
            long d = (c2 - r2) - (c1 - r1);  // axial distance
            Tab swapped = tabs[i];
            std::swap(swapped.cell[k - 1], swapped.cell[k]);
            int j = indexOf(swapped);
            if (j < 0) {
                m.at(i, i) = CycloNum(Rational(1, d));  // +1 same row, -1 same col
            } else {
                m.at(i, i) = CycloNum(Rational(1, d));
                if (j > i) m.at(i, j) = CycloNum(Rational(1) - Rational(1, d * d));
                else m.at(i, j) = CycloNum(1);
            }
        }
        gens.push_back(m);
    }
    return gens;
}

// ---------------------------------------------------------------------------
// Global generator matrices for the glued representation.

inline std::vector<CMatrix> WreathOracle::generator_matrices(const WreathCharLabel& label,
                                                             const std::vector<CoverElt>& gens,
                                                             const EnumeratedCover& H) {
    (void)H;
    const MultiPartition& lambda = label.lambda;
    int p = W_.p, t = W_.t;
    int d = S_.rows();
    // Factor descriptors in block order.
    struct Fac {
        bool selfAssoc;
        int firstBlock, nblocks;
        int kind;  // 0 = block0, j >= 1 = zeta_j factor
        Partition part;
    };
    std::vector<Fac> facs;
    int block = 0;
    int t0 = partitions::size_of(lambda.first);
    if (t0 > 0) {
        facs.push_back({partitions::sigma(lambda.first) == 1, block, t0, 0, lambda.first});
        block += t0;
    }
    for (int j = 1; j <= (p - 1) / 2; ++j) {
        int tj = partitions::size_of(lambda.rest[j - 1]);
        if (tj == 0) continue;
        facs.push_back({tj % 2 == 0, block, tj, j, lambda.rest[j - 1]});
        block += tj;
    }
    // Slot order: self-associate factors first.
    std::vector<int> slotOrder;
    for (size_t i = 0; i < facs.size(); ++i)
        if (facs[i].selfAssoc) slotOrder.push_back(static_cast<int>(i));
    int numSelf = static_cast<int>(slotOrder.size());
    for (size_t i = 0; i < facs.size(); ++i)
        if (!facs[i].selfAssoc) slotOrder.push_back(static_cast<int>(i));
    int numNonSelf = static_cast<int>(facs.size()) - numSelf;
    std::vector<int> slotOfFactor(facs.size());
    for (size_t s = 0; s < slotOrder.size(); ++s) slotOfFactor[slotOrder[s]] = static_cast<int>(s);

    // Per-factor data: dimensions, per-generator matrices, associators.
    int variant = +1;  // pairs handled by the parity twist at comparison time
    std::vector<std::vector<CMatrix>> xiGens(facs.size());
    std::vector<std::vector<CMatrix>> cliffGens(facs.size());
    std::vector<std::vector<CMatrix>> symGens(facs.size());
    std::vector<CMatrix> assoc(facs.size());
    std::vector<int> facDim(facs.size());
    for (size_t i = 0; i < facs.size(); ++i) {
        const Fac& f = facs[i];
        if (f.kind == 0) {
            xiGens[i] = xi_rep(f.part, variant);
            int dxi = f.part == StrictPartition{3} ? 2 : 1;
            facDim[i] = ipow(d, f.nblocks) * dxi;
            if (f.selfAssoc) {
                CMatrix sExt = CMatrix::identity(1);
                for (int b = 0; b < f.nblocks; ++b) sExt = CMatrix::kronecker(sExt, eigenS());
                assoc[i] = CMatrix::kronecker(sExt, xi_assoc(f.part));
            } else {
                assoc[i] = CMatrix::identity(facDim[i]);
            }
        } else {
            cliffGens[i] = clifford_gens(f.nblocks);
            symGens[i] = sym_rep(f.part);
            int dc = cliffGens[i].empty() ? 1 : cliffGens[i][0].rows();
            int ds = symGens[i].empty() ? oracle_sym_dim(f.part) : symGens[i][0].rows();
            facDim[i] = dc * ds;
            if (f.selfAssoc) {
                // volume element of the Clifford factor, normalized to square 1
                CMatrix vol = CMatrix::identity(dc);
                for (auto& E : cliffGens[i]) vol = vol * E;
                CMatrix v2 = vol * vol;
                if (!(v2 == CMatrix::identity(dc))) vol = CycloNum::i() * vol;
                assoc[i] = CMatrix::kronecker(vol, CMatrix::identity(ds));
            } else {
                assoc[i] = CMatrix::identity(facDim[i]);
            }
        }
    }
    // The cross-factor Clifford module.
    std::vector<CMatrix> crossGens = clifford_gens(numNonSelf);
    int dCross = crossGens.empty() ? 1 : crossGens[0].rows();

    int totalDim = dCross;
    for (int s = 0; s < static_cast<int>(facs.size()); ++s) totalDim *= facDim[slotOrder[s]];

    // Assemble the matrix of one generator supported in factor `fi`.
    auto assemble = [&](int fi, const CMatrix& inFactor, bool odd) {
        CMatrix m = CMatrix::identity(1);
        // cross-Clifford part
        if (!facs[fi].selfAssoc && odd) {
            int idx = slotOfFactor[fi] - numSelf;  // 0-based among non-self
            m = CMatrix::kronecker(m, crossGens[idx]);
        } else {
            m = CMatrix::kronecker(m, CMatrix::identity(dCross));
        }
        for (int s = 0; s < static_cast<int>(facs.size()); ++s) {
            int fj = slotOrder[s];
            if (fj == fi) {
                m = CMatrix::kronecker(m, inFactor);
            } else if (s < slotOfFactor[fi] && odd) {
                m = CMatrix::kronecker(m, assoc[fj]);  // identity for non-self factors
            } else {
                m = CMatrix::kronecker(m, CMatrix::identity(facDim[fj]));
            }
        }
        return m;
    };

    // In-factor matrices per generator kind.
    auto np_gen_matrix = [&](int fi, const CoverElt& u, int blockAbs) -> CMatrix {
        const Fac& f = facs[fi];
        int rel = blockAbs - f.firstBlock;
        CoverElt u0 = W_.shift_to_block0_pub(u, blockAbs);
        bool odd = perms::parity(u.perm) == -1;
        if (f.kind == 0) {
            int dxi = f.part == StrictPartition{3} ? 2 : 1;
            CMatrix m = CMatrix::identity(1);
            for (int slot = 0; slot < f.nblocks; ++slot) {
                if (slot < rel && odd) m = CMatrix::kronecker(m, eigenS());
                else if (slot == rel) m = CMatrix::kronecker(m, rho0_eigen(u0));
                else m = CMatrix::kronecker(m, CMatrix::identity(d));
            }
            return CMatrix::kronecker(m, CMatrix::identity(dxi));
        }
        CycloNum scalar = W_.zeta_lin(f.kind, +1, u0);
        int dc = cliffGens[fi].empty() ? 1 : cliffGens[fi][0].rows();
        int ds = facDim[fi] / dc;
        CMatrix m = odd ? cliffGens[fi][rel] : CMatrix::identity(dc);
        return scalar * CMatrix::kronecker(m, CMatrix::identity(ds));
    };
    auto block_gen_matrix = [&](int fi, int k) -> CMatrix {
        const Fac& f = facs[fi];
        int rel = k - f.firstBlock;  // T~_k swaps blocks k-1, k: rel in [1, nblocks)
        if (f.kind == 0) {
            CMatrix m = tj_matrix(rel, f.nblocks, d);
            CMatrix xiMat = xiGens[fi].empty() ? CMatrix::identity(1) : xiGens[fi][rel - 1];
            return CMatrix::kronecker(m, xiMat);
        }
        // i/sqrt2 (E_rel-1 + E_rel) ox Sym(s_rel)
        CycloNum c = CycloNum::i() / CycloNum::sqrt2();
        CMatrix cm = c * (cliffGens[fi][rel - 1] + cliffGens[fi][rel]);
        CMatrix sm = symGens[fi].empty() ? CMatrix::identity(1) : symGens[fi][rel - 1];
        return CMatrix::kronecker(cm, sm);
    };

    std::vector<CMatrix> out;
    for (const auto& g : gens) {
        if (perms::is_identity(g.perm)) {
            out.push_back(g.sign ? CMatrix::scalar(totalDim, CycloNum(-1))
                                 : CMatrix::identity(totalDim));
            continue;
        }
        // which factor does this generator live in?
        int blockAbs = -1;
        bool isBlockGen = false;
        int blockGenK = -1;
        Perm beta(t);
        for (int b = 0; b < t; ++b) beta[b] = g.perm[b * p] / p;
        if (!perms::is_identity(beta)) {
            isBlockGen = true;
            for (int b = 0; b < t; ++b)
                if (beta[b] == b - 1) blockGenK = b;
        } else {
            for (int b = 0; b < t; ++b)
                if (g.perm[b * p] % p != 0 || g.perm[b * p + 1] % p != 1) { blockAbs = b; break; }
            if (blockAbs < 0)
                for (int b = 0; b < t; ++b) {
                    bool moved = false;
                    for (int q = 0; q < p; ++q)
                        if (g.perm[b * p + q] != b * p + q) moved = true;
                    if (moved) { blockAbs = b; break; }
                }
        }
        int fi = -1;
        int key = isBlockGen ? blockGenK : blockAbs;
        for (size_t i = 0; i < facs.size(); ++i)
            if (key >= facs[i].firstBlock && key < facs[i].firstBlock + facs[i].nblocks)
                fi = static_cast<int>(i);
        if (fi < 0) throw std::logic_error("oracle: generator outside factor ranges");
        bool odd = perms::parity(g.perm) == -1;
        CMatrix inFactor = isBlockGen ? block_gen_matrix(fi, blockGenK)
                                      : np_gen_matrix(fi, g, blockAbs);
        out.push_back(assemble(fi, inFactor, odd));
    }
    return out;
}

}  // namespace spincover
