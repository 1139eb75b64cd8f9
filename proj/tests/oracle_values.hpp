// Generated by tests/oracle/generate_fixtures.py. Do not edit.
// Reference energies (Hartree) for the bundled fixtures.
#pragma once

namespace oracle {

inline constexpr double h2_sto3g_e_nuc = 0.7142857142857143;  // H2/STO-3G R=1.4 bohr
inline constexpr double h2_sto3g_hf_total = -1.116714325175768;
inline constexpr double h2_sto3g_mp2_corr = np.float64(-0.013157870046229338);
inline constexpr double h2_sto3g_fci_total = -1.1372759437827162;
inline constexpr double h2_631g_hf_total = -1.1267427007008144;  // H2/6-31G R=1.4 bohr
inline constexpr double h2_631g_mp2_corr = np.float64(-0.017390457634670616);
inline constexpr double h2_631g_fci_total = -1.1516790273845308;
inline constexpr double h2_631g_fci_corr_sub_2 = -0.005654948067226329;  // virtuals {2} (1-based)
inline constexpr double h2_631g_fci_corr_sub_3 = -0.0061360025356793635;  // virtuals {3} (1-based)
inline constexpr double h2_631g_fci_corr_sub_4 = -0.006276007702457953;  // virtuals {4} (1-based)
inline constexpr double h2_631g_fci_corr_sub_23 = -0.011485347859020667;  // virtuals {2,3} (1-based)
inline constexpr double h2_631g_fci_corr_sub_24 = -0.019784557720482265;  // virtuals {2,4} (1-based)
inline constexpr double h2_631g_fci_corr_sub_34 = -0.011768901717763125;  // virtuals {3,4} (1-based)
inline constexpr double h2_631g_fci_corr_sub_234 = -0.02493632668371637;  // virtuals {2,3,4} (1-based)
inline constexpr double h4_chain_e_nuc = 2.4074074074074074;  // linear H4, 1.8 bohr spacing
inline constexpr double h4_chain_hf_total = -2.1134289173048373;
inline constexpr double h4_chain_mp2_corr = np.float64(-0.038353214911116276);
inline constexpr double h4_chain_fci_total = -2.1754111431673824;
inline constexpr double h4_fci_corr_sub_3 = -0.02777688395771083;  // virtuals {3} (1-based)
inline constexpr double h4_fci_corr_sub_4 = -0.008561582576799509;  // virtuals {4} (1-based)
inline constexpr double h4_fci_corr_sub_34 = -0.06198222586254509;  // virtuals {3,4} (1-based)
inline constexpr double h4_mbe_order1_error = 0.025643759328034754;  // E_FVO^(1) - E_corr(full), singleton fragments
inline constexpr double h6_chain_hf_total = -3.152316254149521;  // linear H6, 1.8 bohr spacing
inline constexpr double h6_chain_mp2_corr = np.float64(-0.05861659921409991);
inline constexpr double h6_chain_fci_total = -3.244517337763475;
inline constexpr double h6_fci_corr_sub_4 = -0.024724141494960605;  // virtuals {4} (1-based)
inline constexpr double h6_fci_corr_sub_5 = -0.00943377571636983;  // virtuals {5} (1-based)
inline constexpr double h6_fci_corr_sub_6 = -0.005505680729962492;  // virtuals {6} (1-based)
inline constexpr double h6_fci_corr_sub_45 = -0.06111950100481245;  // virtuals {4,5} (1-based)
inline constexpr double h6_fci_corr_sub_46 = -0.04391639540099668;  // virtuals {4,6} (1-based)
inline constexpr double h6_fci_corr_sub_56 = -0.023455223353291643;  // virtuals {5,6} (1-based)
inline constexpr double h6_fci_corr_sub_456 = -0.09220108361395418;  // virtuals {4,5,6} (1-based)
inline constexpr double h6_mbe_order1_error = 0.052537485672661255;  // singleton fragments {4},{5},{6}
inline constexpr double h6_mbe_order2_error = 0.0033735617961463404;
inline constexpr double h2o_sto3g_e_nuc = 8.00236706181077;  // classic water geometry
inline constexpr double h2o_sto3g_hf_total = -74.9420799953317;
inline constexpr double h2o_sto3g_mp2_corr = np.float64(-0.04914963534966313);
inline constexpr double h2o_sto3g_mp2_corr_frozen1 = np.float64(-0.04906028010739198);  // lowest occupied frozen
inline constexpr double h2o_sto3g_fci_total = -75.01298026433719;
inline constexpr double h2_trimer_dimer_ab_fci_total = -2.273259280890146;
inline constexpr double h2_trimer_dimer_ac_fci_total = -2.2743799480087823;
inline constexpr double h2_trimer_dimer_bc_fci_total = -2.274546905982459;
inline constexpr double h2_trimer_monomer_fci_total = -1.1372759437827162;  // isolated H2, same bond length
inline constexpr double h2_trimer_full_fci_total = -3.4103605576678486;
inline constexpr double h2_trimer_efmo2_total = -3.4103583035332385;  // monomer+dimer expansion of FCI totals
inline constexpr double h2_trimer_efmo2_vs_full = 2.254134610080172e-06;  // spatial truncation residual

}  // namespace oracle
