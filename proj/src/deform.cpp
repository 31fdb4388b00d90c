#include "x33/deform.hpp"

#include <stdexcept>

namespace x33 {

std::string DeformationDirection::str() const {
    return "(" + rat_str(alpha) + "," + rat_str(beta) + ")";
}

namespace {

// Restriction to C of (dp/dx)/x with u = v = 0; defined because every
// perturbation term is divisible by u, v, or x^2 y.
BinForm q_on_line(const ConstructionData& data) {
    BiForm dpx = data.p.partial(VX).substitute_zero(VU).substitute_zero(VV);
    if (dpx.is_zero()) return BinForm(1);
    Monomial6 xonly;
    xonly.e[VX] = 1;
    if (!dpx.every_term_divisible(xonly))
        throw std::logic_error("dp/dx not divisible by x off the degenerate fibre");
    return dpx.exact_div_var(VX).restrict_to_line();
}

// g(eps*s, y, z) = g(0,y,z) + eps * s * (dg/dx)(0,y,z) over the dual numbers.
DualBinForm substitute_eps(const TernForm& g, const BinForm& s) {
    return {g.x_coeff(0), s * g.x_coeff(1)};
}

BundleMapP1 normal_bundle_map(const ConstructionData& data) {
    BinForm fx = data.F.partial(VX).restrict_to_line();
    BinForm fu = data.F.partial(VU).restrict_to_line();
    BinForm fv = data.F.partial(VV).restrict_to_line();
    return BundleMapP1({1, 0, 0}, 3, {fx, fu, fv});
}

}  // namespace

FirstOrder first_order_from_map(const BundleMapP1& map) {
    SplittingType s = splitting_type(map);
    if (s.rank() != map.source_degs.size() - 1)
        throw std::runtime_error("splitting fit guard: kernel rank " +
                                 std::to_string(s.rank()) + ", expected " +
                                 std::to_string(map.source_degs.size() - 1));
    FirstOrder out;
    out.splitting = s;
    out.dimension = s.h0();
    out.basis = {DeformationDirection{Rat(1), Rat(0)}, DeformationDirection{Rat(0), Rat(1)}};
    return out;
}

FirstOrder first_order(const ConstructionData& data) {
    return first_order_from_map(normal_bundle_map(data));
}

std::array<DualBinForm, 3> eps_normal_map(const DeformationDirection& dir,
                                          const ConstructionData& data) {
    BinForm s = BinForm::monomial(1, 0, dir.alpha) + BinForm::monomial(0, 1, dir.beta);
    if (dir.is_zero()) s = BinForm(1);
    TernForm fx = data.F.partial(VX).restrict_to_fibre();
    TernForm fu = data.F.partial(VU).restrict_to_fibre();
    TernForm fv = data.F.partial(VV).restrict_to_fibre();
    return {substitute_eps(fx, s), substitute_eps(fu, s), substitute_eps(fv, s)};
}

const std::array<const char*, 4>& ObstructionSystem::basis_names() {
    static const std::array<const char*, 4> names = {"y^3", "y^2 z", "y z^2", "z^3"};
    return names;
}

std::vector<Rat> ObstructionSystem::rhs_at(const DeformationDirection& dir) const {
    std::vector<Rat> v;
    for (const auto& f : rhs_sym) v.push_back(f.is_zero() ? Rat(0) : f.eval(dir.alpha, dir.beta));
    return v;
}

ObstructionSystem second_order_system(const ConstructionData& data) {
    ObstructionSystem sys;
    BinForm col1 = data.F.partial(VU).restrict_to_line();  // z^3 + dp/du|_C
    BinForm col2 = data.F.partial(VV).restrict_to_line();  // z^2 y + y^3 + dp/dv|_C
    if (col1.degree() != 3 || col2.degree() != 3)
        throw std::logic_error("column forms must be cubic");
    for (int k = 0; k < 4; ++k) {
        sys.m.at(k, 0) = col1.coeff(k);
        sys.m.at(k, 1) = col2.coeff(k);
    }
    // rhs = -(2y + q)(alpha y + beta z)^2, expanded per cubic monomial.
    BinForm factor = BinForm::monomial(1, 0, Rat(2)) + q_on_line(data);
    BinForm yy = factor * BinForm::monomial(2, 0);        // alpha^2 part
    BinForm yz = factor * BinForm::monomial(1, 1, Rat(2));  // alpha beta part
    BinForm zz = factor * BinForm::monomial(0, 2);        // beta^2 part
    for (int k = 0; k < 4; ++k) {
        sys.rhs_sym[k] = BinForm::from_coeffs(
            2, {-yy.coeff(k), -yz.coeff(k), -zz.coeff(k)});
    }
    return sys;
}

bool obstructed(const DeformationDirection& dir, const ConstructionData& data) {
    if (dir.is_zero()) throw std::invalid_argument("zero direction is excluded");
    ObstructionSystem sys = second_order_system(data);
    return !sys.m.solve(sys.rhs_at(dir)).has_value();
}

std::string ModuliVerdict::str() const {
    switch (status) {
        case ObstructionStatus::AllObstructed:
            return "every first-order direction is obstructed; local ring " + local_ring;
        case ObstructionStatus::NotAllObstructed:
            return "not all directions obstructed (common zero of the compatibility forms)";
        case ObstructionStatus::Inconclusive:
            return "inconclusive (system underdetermined)";
    }
    return "";
}

ModuliVerdict obstructed_all(const ConstructionData& data) {
    ObstructionSystem sys = second_order_system(data);
    ModuliVerdict out;
    out.first_order_dim = first_order(data).dimension;

    // Compatibility forms: the left null space of M applied to the rhs.
    auto null_basis = sys.m.transposed().kernel_basis();
    for (const auto& w : null_basis) {
        BinForm form;
        for (int k = 0; k < 4; ++k) {
            if (w[k] == 0 || sys.rhs_sym[k].is_zero()) continue;
            BinForm piece = w[k] * sys.rhs_sym[k];
            form = form.is_zero() && form.degree() == BinForm::kZeroDegree ? piece : form + piece;
        }
        if (!form.is_zero()) {
            // canonical scale: first nonzero coefficient 1
            for (int k = 0; k <= form.degree(); ++k) {
                if (form.coeff(k) != 0) {
                    form = (Rat(1) / form.coeff(k)) * form;
                    break;
                }
            }
            out.compatibility_forms.push_back(form);
        }
    }
    if (out.compatibility_forms.empty()) {
        out.status = ObstructionStatus::Inconclusive;
        return out;
    }
    out.compat_gcd = binform_gcd(out.compatibility_forms);
    if (out.compat_gcd.degree() == 0) {
        out.status = ObstructionStatus::AllObstructed;
        if (out.first_order_dim == 2)
            out.local_ring = "C[ε,η]/(ε²,εη,η²)";
        else
            out.local_ring = "C[e1..e" + std::to_string(out.first_order_dim) +
                             "]/(all degree-2 monomials)";
    } else {
        out.status = ObstructionStatus::NotAllObstructed;
    }
    return out;
}

RestrictionImage restriction_image(const DeformationDirection& dir,
                                   const ConstructionData& data) {
    if (dir.is_zero()) throw std::invalid_argument("zero direction is excluded");
    ObstructionSystem sys = second_order_system(data);
    BinForm s = BinForm::monomial(1, 0, dir.alpha) + BinForm::monomial(0, 1, dir.beta);
    BinForm factor = BinForm::monomial(1, 0, Rat(2)) + q_on_line(data);
    // Columns: g0 = a y + b z and the two correction constants; the attainable
    // g0 are the projections of the kernel of [(2y+q) s g0 | M].
    BinForm ay = factor * s * BinForm::monomial(1, 0);
    BinForm bz = factor * s * BinForm::monomial(0, 1);
    RatMat big(4, 4);
    for (int k = 0; k < 4; ++k) {
        big.at(k, 0) = ay.coeff(k);
        big.at(k, 1) = bz.coeff(k);
        big.at(k, 2) = sys.m.at(k, 0);
        big.at(k, 3) = sys.m.at(k, 1);
    }
    RestrictionImage out;
    auto kernel = big.kernel_basis();
    // Projection onto the (a, b) plane.
    RatMat proj(static_cast<int>(kernel.size()), 2);
    for (size_t i = 0; i < kernel.size(); ++i) {
        proj.at(static_cast<int>(i), 0) = kernel[i][0];
        proj.at(static_cast<int>(i), 1) = kernel[i][1];
    }
    std::vector<int> piv;
    RatMat r = proj.rref(&piv);
    out.dimension = static_cast<long>(piv.size());
    for (size_t i = 0; i < piv.size(); ++i)
        out.basis.push_back({r.at(static_cast<int>(i), 0), r.at(static_cast<int>(i), 1)});
    out.s_attained = !obstructed(dir, data);
    return out;
}

bool perturbation_bound_ok(const ConstructionData& data) {
    Rat bound = rat(1, 10);
    BinForm q = q_on_line(data);
    BinForm du = data.p.partial(VU).restrict_to_line();
    BinForm dv = data.p.partial(VV).restrict_to_line();
    for (const BinForm* f : {&q, &du, &dv})
        if (f->max_abs_coeff() >= bound) return false;
    return true;
}

}  // namespace x33
