#include "shellga/stress.hpp"

#include "shellga/balance.hpp"
#include "shellga/errors.hpp"

namespace shellga {

void MaterialParams::validate() const
{
    if (!(young > 0.0)) throw ConfigInvalid("Young's modulus must be positive");
    if (!(poisson > -1.0 && poisson < 0.5))
        throw ConfigInvalid("Poisson's ratio must lie in (-1, 0.5)");
    if (!(thickness > 0.0)) throw ConfigInvalid("thickness must be positive");
    if (!(density0 > 0.0)) throw ConfigInvalid("reference density must be positive");
}

double energy_density(const Mat2& strain, const Mat2& curvature_change,
                      const Mat2& metric_inv, const MaterialParams& mat)
{
    const Mat2 em = metric_inv * strain;
    const Mat2 hm = metric_inv * curvature_change;
    const double tr_e = em.trace();
    const double tr_h = hm.trace();
    const double tr_e2 = (em * em).trace();
    const double tr_h2 = (hm * hm).trace();
    const double nu = mat.poisson;
    return 0.5 * mat.membrane_modulus() * ((1.0 - nu) * tr_e2 + nu * tr_e * tr_e) +
           0.5 * mat.bending_modulus() * ((1.0 - nu) * tr_h2 + nu * tr_h * tr_h);
}

ConstitutiveResult constitutive_eval(const Mat2& strain, const Mat2& curvature_change,
                                     const Mat2& metric_inv, const MaterialParams& mat)
{
    const double nu = mat.poisson;
    const Mat2 e_up = metric_inv * strain * metric_inv;   // E^{ij}
    const Mat2 h_up = metric_inv * curvature_change * metric_inv;
    const double tr_e = (metric_inv * strain).trace();
    const double tr_h = (metric_inv * curvature_change).trace();

    ConstitutiveResult out;
    out.stress_mod =
        mat.membrane_modulus() * ((1.0 - nu) * e_up + (nu * tr_e) * metric_inv);
    out.couple_mod =
        mat.bending_modulus() * ((1.0 - nu) * h_up + (nu * tr_h) * metric_inv);
    return out;
}

ShearStress shear_closure(const CoupleField& couple, const SurfaceFrame& ref,
                          const SurfaceFrame& spa, const ParamRect& domain,
                          double u1, double u2, double step,
                          double c13, double c23, double rho0)
{
    BivectorComponentField field = [&couple](double v1, double v2, double out[3][2]) {
        const Mat2 n = couple(v1, v2);
        for (int i = 0; i < 2; ++i) {
            out[0][i] = n(0, i); // M^{(1,3)i} = N^{1i}
            out[1][i] = n(1, i); // M^{(2,3)i} = N^{2i}
            out[2][i] = 0.0;
        }
    };
    const BivectorDivergence div =
        covariant_divergence_bivector(field, ref, spa, domain, u1, u2, step);
    ShearStress out;
    out.s31 = -(div.comp13 + rho0 * c13);
    out.s32 = -(div.comp23 + rho0 * c23);
    return out;
}

StressState assemble_stresses(const DeformationState& def, const Mat2& curvature_change,
                              const ConstitutiveResult& cr, const ShearStress& shear,
                              const MaterialParams& mat)
{
    if (!(def.det_f > 0.0))
        throw OrientationReversed("stress assembly requires det F > 0");

    StressState st;
    st.stress_mod = cr.stress_mod;
    st.couple_mod = cr.couple_mod;

    // S^{ij} = Stilde^{ij} + b^i_k N^{jk} with the spatial mixed curvature
    const Mat2 bmix = def.spa.metric_inv * def.spa.second_form;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            double v = cr.stress_mod(i, j);
            for (int k = 0; k < 2; ++k) v += bmix(i, k) * cr.couple_mod(j, k);
            st.s[i][j] = v;
        }
    st.s[2][0] = shear.s31;
    st.s[2][1] = shear.s32;

    for (int a = 0; a < 3; ++a)
        for (int i = 0; i < 2; ++i) st.t[a][i] = st.s[a][i];

    const Vec3 frame[3] = {def.spa.e[0], def.spa.e[1], def.spa.n};
    for (int i = 0; i < 2; ++i) {
        Vec3 col{};
        for (int a = 0; a < 3; ++a) col += st.t[a][i] * frame[a];
        st.t_cols[i] = col;
    }

    // M(E^i) = N^{ji} e_j ^ e3, vanishing in the e1^e2 direction
    for (int i = 0; i < 2; ++i) {
        Multivector m;
        for (int j = 0; j < 2; ++j)
            m = m + cr.couple_mod(j, i) * wedge(def.spa.e[j], def.spa.n);
        st.m_cols[i] = m;
        for (int A = 0; A < 3; ++A)
            st.m_comp[A][i] = inner_scalar(def.spa.biv_recip[A], m);
        // modified first couple stress: M(E^i) . e3
        const Vec3 mvec = -vec_dot_bivector(def.spa.n, m);
        for (int j = 0; j < 2; ++j) st.mmod[j][i] = dot(def.spa.erecip[j], mvec);
    }

    for (int a = 0; a < 3; ++a)
        for (int i = 0; i < 2; ++i) st.sigma[a][i] = st.s[a][i] / def.det_f;
    for (int A = 0; A < 3; ++A)
        for (int i = 0; i < 2; ++i) st.m_spatial[A][i] = st.m_comp[A][i] / def.det_f;

    st.energy = energy_density(def.strain, curvature_change, def.ref.metric_inv, mat);
    return st;
}

} // namespace shellga
