#pragma once

namespace mcx {

// Regularized incomplete gamma functions P(a,x) and Q(a,x) = 1 - P(a,x).
double gamma_p(double a, double x);
double gamma_q(double a, double x);

// Upper tail of the chi-squared distribution with k degrees of freedom.
double chi_squared_sf(double stat, int dof);

// Upper tail Q(lambda) of the Kolmogorov distribution,
// Q(lambda) = 2 sum_{k>=1} (-1)^{k-1} exp(-2 k^2 lambda^2).
double kolmogorov_sf(double lambda);

// Asymptotic p-value for a KS statistic with effective sample size ne
// (ne = n for one sample, m*n/(m+n) for two), with the usual small-sample
// correction to the argument.
double ks_pvalue(double statistic, double effective_n);

} // namespace mcx
