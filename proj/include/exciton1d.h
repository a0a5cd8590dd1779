/*
 * exciton1d - collective-excitation dispersion and radiative decay rates for
 * an infinite 1D lattice of two-level atoms.
 *
 * C API of the shared library. All entry points are thread-safe; models and
 * tables are immutable after creation. Functions returning exc_status leave
 * their outputs untouched on failure and store a detail message retrievable
 * with exc_last_error() (thread-local, valid until the next failing call).
 *
 * Units: energies in eV, lengths in Angstrom, angles in radians, rates in
 * 1/s, fields in V/m.
 */

#ifndef EXCITON1D_H
#define EXCITON1D_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum exc_status {
    EXC_OK = 0,
    EXC_ERR_INVALID_ARGUMENT = 1, /* bad parameter value or null pointer */
    EXC_ERR_DOMAIN = 2,           /* input outside an operation's domain */
    EXC_ERR_NUMERIC = 3,          /* quadrature / solver failure */
    EXC_ERR_IO = 4,               /* file could not be written or parsed */
    EXC_ERR_INTERNAL = 5
} exc_status;

const char* exc_status_name(exc_status status);
const char* exc_last_error(void);
const char* exc_version(void);

/* ------------------------------------------------------------------ */
/* model                                                               */
/* ------------------------------------------------------------------ */

typedef struct exc_params {
    double ea_ev;          /* transition energy, > 0 */
    double a_angstrom;     /* lattice constant, > 0 */
    double mu_e_angstrom;  /* transition dipole, >= 0 */
    double theta_rad;      /* dipole angle to the lattice axis, in [0, pi] */
    int neighbor_cutoff;   /* neighbor shells in the dispersion sum, >= 1 */
} exc_params;

/* ea=1 eV, a=1000 A, mu=1 eA, theta=0, cutoff=1 */
void exc_params_defaults(exc_params* params);

typedef struct exc_model exc_model;

exc_status exc_model_create(const exc_params* params, exc_model** out);
void exc_model_destroy(exc_model* model);
exc_status exc_model_params(const exc_model* model, exc_params* out);

/* ------------------------------------------------------------------ */
/* dispersion                                                          */
/* ------------------------------------------------------------------ */

/* hbar*J between atoms separated by `separation_angstrom` (> 0), in eV */
exc_status exc_dipole_coupling_ev(const exc_model* model, double separation_angstrom,
                                  double* out_ev);

/* exciton energy at dimensionless ka in [-pi, pi] */
exc_status exc_dispersion_ev(const exc_model* model, double ka, double* out_ev);

exc_status exc_band_edges_ev(const exc_model* model, double* out_min_ev, double* out_max_ev);

/* The n_sites+1 allowed ka values for an even n_sites >= 2, ascending.
 * Pass out=NULL to query the required capacity via out_count. */
exc_status exc_allowed_ka(int n_sites, double* out, size_t capacity, size_t* out_count);

double exc_magic_angle_rad(void);
double exc_deg_to_rad(double deg);
double exc_rad_to_deg(double rad);
double exc_energy_to_rate_rad_per_s(double energy_ev);

/* ------------------------------------------------------------------ */
/* radiative decay                                                     */
/* ------------------------------------------------------------------ */

typedef enum exc_mode {
    EXC_MODE_FORMULA = 0,  /* closed form everywhere, negative factor clamped */
    EXC_MODE_LIGHTCONE = 1 /* additionally zero outside the light cone (r > 1) */
} exc_mode;

typedef enum exc_regime {
    EXC_REGIME_SUPERRADIANT = 0,
    EXC_REGIME_SUBRADIANT = 1,
    EXC_REGIME_DARK = 2
} exc_regime;

typedef struct exc_decay_result {
    double gamma_per_s;
    double gamma_atom_per_s;
    double ratio;    /* gamma / gamma_atom, 0 when the atom rate vanishes */
    int regime;      /* exc_regime */
    int mode;        /* exc_mode */
    double bracket;  /* angular factor before clamping */
    double r;        /* hbar*c*k / E_ex */
} exc_decay_result;

exc_status exc_gamma_atom(const exc_model* model, double* out_per_s);
exc_status exc_gamma(const exc_model* model, double ka, int mode, exc_decay_result* out);

typedef struct exc_critical_k {
    int present;
    int beyond_zone_edge; /* factor positive throughout (0, pi] */
    double ka_c;          /* meaningful when present */
} exc_critical_k;

exc_status exc_critical_ka(const exc_model* model, exc_critical_k* out);

typedef struct exc_dark_window_result {
    int present;
    double theta_star_rad; /* rate is zero on [0, theta*) and (pi - theta*, pi] */
} exc_dark_window_result;

exc_status exc_dark_window(const exc_model* model, double ka, exc_dark_window_result* out);

/* ------------------------------------------------------------------ */
/* golden-rule cross-check                                             */
/* ------------------------------------------------------------------ */

typedef struct exc_quad_spec {
    double rel_tol;       /* > 0 */
    double abs_tol;       /* >= 0 */
    int max_subdivisions; /* >= 1 */
} exc_quad_spec;

/* rel_tol=1e-10, abs_tol=0, max_subdivisions=200 */
void exc_quad_spec_defaults(exc_quad_spec* spec);

exc_status exc_gamma_golden_rule(const exc_model* model, double ka,
                                 const exc_quad_spec* spec, double* out_per_s);

typedef struct exc_validation_summary {
    double max_rel_err;
    double mean_rel_err;
    int pass;
} exc_validation_summary;

/* Compares the quadrature rate against the closed form (lightcone mode) on
 * the sample grid. out_json (optional) receives a malloc'd report; release
 * it with exc_string_free. */
exc_status exc_validate_grid(const exc_model* model,
                             const double* ka_samples, size_t n_ka,
                             const double* theta_samples_rad, size_t n_theta,
                             const exc_quad_spec* spec,
                             exc_validation_summary* out_summary,
                             char** out_json);

/* Same on the default 20x20 grid (ka in [0.01, 0.45], theta in [0, pi/2]). */
exc_status exc_validate_default(const exc_model* model, const exc_quad_spec* spec,
                                exc_validation_summary* out_summary, char** out_json);

void exc_string_free(char* s);

/* ------------------------------------------------------------------ */
/* far field                                                           */
/* ------------------------------------------------------------------ */

typedef struct exc_exciton_state {
    double amplitude0_re; /* <B_k(0)> */
    double amplitude0_im;
    double population0;   /* <B_k^dag(0) B_k(0)>, >= 0 */
    double ka;
    double theta_rad;
    int n_sites;          /* >= 1 */
} exc_exciton_state;

typedef struct exc_field_point {
    double rho_angstrom; /* > 0 */
    double z_angstrom;
    double t_s;
} exc_field_point;

#define EXC_WARN_KA_LARGE 1u
#define EXC_WARN_RHO_NEAR_FIELD 2u

/* bitmask of EXC_WARN_*; 0 when the far-field expressions are valid */
exc_status exc_farfield_warnings(const exc_model* model, const exc_exciton_state* state,
                                 const exc_field_point* pt, unsigned* out_warnings);

exc_status exc_field_amplitude(const exc_model* model, const exc_exciton_state* state,
                               const exc_field_point* pt, double* out_re, double* out_im);

exc_status exc_intensity(const exc_model* model, const exc_exciton_state* state,
                         const exc_field_point* pt, double* out_v2_per_m2);

double exc_intensity_to_watts_per_m2(double intensity_v2_per_m2);

/* Intensity on an ascending time grid at fixed (rho, z); out has n_t slots. */
exc_status exc_intensity_trace(const exc_model* model, const exc_exciton_state* state,
                               double rho_angstrom, double z_angstrom,
                               const double* t_s, size_t n_t, double* out_v2_per_m2);

/* Serialized trace (CSV columns t_s,intensity_V2_per_m2 / JSON arrays). */
exc_status exc_intensity_trace_csv(const exc_model* model, const exc_exciton_state* state,
                                   double rho_angstrom, double z_angstrom,
                                   const double* t_s, size_t n_t, char** out_csv);
exc_status exc_intensity_trace_json(const exc_model* model, const exc_exciton_state* state,
                                    double rho_angstrom, double z_angstrom,
                                    const double* t_s, size_t n_t, char** out_json);

/* ------------------------------------------------------------------ */
/* scans                                                               */
/* ------------------------------------------------------------------ */

typedef enum exc_axis { EXC_AXIS_KA = 0, EXC_AXIS_THETA = 1 } exc_axis;

typedef struct exc_scan_spec {
    int axis;           /* exc_axis */
    double fixed_value; /* theta_rad for ka scans, ka for theta scans */
    double lo;
    double hi;
    int steps;          /* >= 2 */
    int mode;           /* exc_mode */
    int include_atom_reference;
} exc_scan_spec;

typedef struct exc_scan_table exc_scan_table;

exc_status exc_scan(const exc_model* model, const exc_scan_spec* spec,
                    exc_scan_table** out);
void exc_scan_table_destroy(exc_scan_table* table);

size_t exc_scan_table_rows(const exc_scan_table* table);
exc_status exc_scan_table_row(const exc_scan_table* table, size_t index,
                              double* out_swept, double* out_gamma_per_s,
                              double* out_ratio, int* out_regime);
exc_status exc_scan_table_gamma_atom(const exc_scan_table* table, double* out_per_s);

exc_status exc_scan_table_csv(const exc_scan_table* table, char** out_csv);
exc_status exc_scan_table_json(const exc_scan_table* table, char** out_json);
exc_status exc_scan_table_write(const exc_scan_table* table, const char* path,
                                int as_json);

/* Writes fig3a.csv, fig3b.csv, fig4.csv, fig5a.csv, fig5b.csv, ka_pi.csv
 * into `dir` (created if missing). Byte-deterministic. */
exc_status exc_figures_write(const exc_model* model, const char* dir);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* EXCITON1D_H */
