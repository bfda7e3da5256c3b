#include "reference.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace ref {
namespace {

const double PI = 3.14159265358979323846;
const double E = 2.71828182845904523536;

struct Basic {
  double (*kernel)(const Vec&);
  double scale;
  bool rotate;
  double pre;
  double post;
  bool poly;
  const char* name;
};

const Basic kBasic[23] = {
    {sphere, 1, true, 0, 0, true, "SPHERE"},
    {ellipsoid, 1, true, 0, 0, true, "ELLIPSOID"},
    {elliptic, 1, true, 0, 0, true, "ELLIPTIC"},
    {discus, 1, true, 0, 0, true, "DISCUS"},
    {cigar, 1, true, 0, 0, true, "CIGAR"},
    {powers, 0.01, true, 0, 0, true, "POWERS"},
    {sharpv, 1, true, 0, 0, true, "SHARPV"},
    {step, 1, true, 0, 0, true, "STEP"},
    {weierstrass, 0.005, true, 0, 0, false, "WEIERSTRASS"},
    {griewank, 6, true, 0, 0, false, "GRIEWANK"},
    {rastrigin, 0.0512, false, 0, 0, false, "RARSTRIGIN_U"},
    {rastrigin, 0.0512, true, 0, 0, false, "RARSTRIGIN"},
    {schaffer_f7, 1, true, 0, 0, false, "SCHAFFERSF7"},
    {grie_rosen, 0.05, true, 0, 1, false, "GRIE_ROSEN"},
    {rosenbrock, 0.02048, true, 0, 1, true, "ROSENBROCK"},
    {schwefel, 10, false, 0, 0, false, "SCHWEFEL_U"},
    {schwefel, 10, true, 0, 0, false, "SCHWEFEL"},
    {katsuura, 0.05, true, 0, 0, false, "KATSUURA"},
    {lunacek, 0.1, true, 2.5, 0, false, "LUNACEK"},
    {ackley, 1, true, 0, 0, false, "ACKLEY"},
    {happycat, 0.05, true, 0, -1, false, "HAPPYCAT"},
    {hgbat, 0.05, true, 0, -1, false, "HGBAT"},
    {schaffer_f6, 1, true, 0, 0, false, "SCHAFFERSF6"},
};

double sq(double v) { return v * v; }

double g2(double x, double y) { return 100 * sq(x * x - y) + sq(x - 1); }
double g3(double x) { return x * x / 4000 - std::cos(x) + 1; }
double g4(double x, double y) {
  const double r2 = x * x + y * y;
  return (sq(std::sin(std::sqrt(r2))) - 0.5) / sq(1 + 0.001 * r2) + 0.5;
}

double bmod(double a, double m) { return a - m * std::floor(a / m); }

// z = R u where R is blockdiag(Q_b) after grouping coordinates by perm.
Vec rotate_blocks(const Data& d, const Vec& u) {
  Vec z(u.size(), 0.0);
  std::size_t off = 0;
  for (const Mat& q : d.blocks) {
    for (std::size_t i = 0; i < q.size(); ++i) {
      double s = 0;
      for (std::size_t j = 0; j < q.size(); ++j) s += q[i][j] * u[d.perm[off + j]];
      z[off + i] = s;
    }
    off += q.size();
  }
  if (off != u.size()) throw std::logic_error("blocks do not cover the dimension");
  return z;
}

double basic_raw(const Data& d, const Vec& x) {
  const Basic& b = kBasic[d.fn];
  const std::size_t n = x.size();
  Vec u(n);
  for (std::size_t i = 0; i < n; ++i) u[i] = b.scale * (x[i] - d.shift[i]) + b.pre;
  Vec z = b.rotate ? rotate_blocks(d, u) : u;
  for (auto& v : z) v += b.post;
  return b.kernel(z);
}

double hybrid_raw(const Data& d, const Vec& x) {
  const HybridTable t = hybrid_table(d.fn);
  if (d.blocks.size() != t.comps.size()) throw std::logic_error("hybrid block count");
  const std::size_t n = x.size();
  Vec y(n);
  for (std::size_t i = 0; i < n; ++i) y[i] = x[i] - d.shift[i];
  double total = 0;
  std::size_t off = 0;
  for (std::size_t c = 0; c < t.comps.size(); ++c) {
    const Basic& b = kBasic[t.comps[c]];
    const Mat& q = d.blocks[c];
    const std::size_t m = q.size();
    Vec chunk(m);
    for (std::size_t j = 0; j < m; ++j) chunk[j] = b.scale * y[d.perm[off + j]] + b.pre;
    Vec z(m);
    for (std::size_t i = 0; i < m; ++i) {
      double s = 0;
      for (std::size_t j = 0; j < m; ++j) s += q[i][j] * chunk[j];
      z[i] = s + b.post;
    }
    total += b.kernel(z);
    off += m;
  }
  return total;
}

double composition_raw(const Data& d, const Vec& x) {
  const CompositionTable t = composition_table(d.fn);
  if (d.comps.size() != t.comps.size()) throw std::logic_error("composition component count");
  std::vector<Vec> optima;
  for (const Data& c : d.comps) optima.push_back(c.shift);
  const Vec w = weights(t.sigma, optima, x);
  double total = 0;
  for (std::size_t i = 0; i < t.comps.size(); ++i) {
    if (d.comps[i].fn != t.comps[i]) throw std::logic_error("composition component id");
    if (w[i] == 0) continue;
    total += w[i] * (t.lambda[i] * raw(d.comps[i], x) + t.bias[i]);
  }
  return total;
}

}  // namespace

double sphere(const Vec& z) {
  double s = 0;
  for (double v : z) s += v * v;
  return s;
}

double ellipsoid(const Vec& z) {
  double s = 0;
  for (std::size_t i = 0; i < z.size(); ++i) s += (i + 1.0) * z[i] * z[i];
  return s;
}

double elliptic(const Vec& z) {
  const std::size_t n = z.size();
  double s = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const double e = n > 1 ? double(i) / double(n - 1) : 0.0;
    s += std::pow(1e6, e) * z[i] * z[i];
  }
  return s;
}

double discus(const Vec& z) {
  double s = 1e6 * z[0] * z[0];
  for (std::size_t i = 1; i < z.size(); ++i) s += z[i] * z[i];
  return s;
}

double cigar(const Vec& z) {
  double s = 0;
  for (std::size_t i = 1; i < z.size(); ++i) s += z[i] * z[i];
  return z[0] * z[0] + 1e6 * s;
}

double powers(const Vec& z) {
  const std::size_t n = z.size();
  double s = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const double e = n > 1 ? 2.0 + 4.0 * double(i) / double(n - 1) : 2.0;
    s += std::pow(std::fabs(z[i]), e);
  }
  return std::sqrt(s);
}

double sharpv(const Vec& z) {
  double s = 0;
  for (std::size_t i = 1; i < z.size(); ++i) s += z[i] * z[i];
  return z[0] * z[0] + 100 * std::sqrt(s);
}

double step(const Vec& z) {
  double s = 0;
  for (double v : z) s += sq(std::floor(v + 0.5));
  return s;
}

double weierstrass(const Vec& z) {
  const double a = 0.5;
  const double b = 3;
  double outer = 0;
  for (double v : z) {
    for (int k = 0; k <= 20; ++k) outer += std::pow(a, k) * std::cos(2 * PI * std::pow(b, k) * (v + 0.5));
  }
  double c = 0;
  for (int k = 0; k <= 20; ++k) c += std::pow(a, k) * std::cos(2 * PI * std::pow(b, k) * 0.5);
  return outer - double(z.size()) * c;
}

double griewank(const Vec& z) {
  double s = 0;
  double p = 1;
  for (std::size_t i = 0; i < z.size(); ++i) {
    s += z[i] * z[i];
    p *= std::cos(z[i] / std::sqrt(i + 1.0));
  }
  return s / 4000 - p + 1;
}

double rastrigin(const Vec& z) {
  double s = 0;
  for (double v : z) s += v * v - 10 * std::cos(2 * PI * v) + 10;
  return s;
}

double schaffer_f7(const Vec& z) {
  const std::size_t n = z.size();
  if (n < 2) return 0;
  double s = 0;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    const double w = std::sqrt(z[i] * z[i] + z[i + 1] * z[i + 1]);
    s += (1 + sq(std::sin(50 * std::pow(w, 0.2)))) * std::sqrt(w);
  }
  return sq(s / double(n - 1));
}

double grie_rosen(const Vec& z) {
  const std::size_t n = z.size();
  double s = 0;
  for (std::size_t i = 0; i < n; ++i) s += g3(g2(z[i], z[(i + 1) % n]));
  return s;
}

double rosenbrock(const Vec& z) {
  double s = 0;
  for (std::size_t i = 0; i + 1 < z.size(); ++i) s += g2(z[i], z[i + 1]);
  return s;
}

double g1(double w, std::size_t dim) {
  const double D = double(dim);
  if (std::fabs(w) <= 500) return w * std::sin(std::sqrt(std::fabs(w)));
  if (w > 500) {
    const double m = bmod(w, 500);
    return (500 - m) * std::sin(std::sqrt(500 - m)) - sq(w - 500) / (10000 * D);
  }
  const double m = bmod(-w, 500);
  return (m - 500) * std::sin(std::sqrt(500 - m)) - sq(w + 500) / (10000 * D);
}

double schwefel(const Vec& z) {
  const std::size_t n = z.size();
  double s = 0;
  for (double v : z) s += g1(v + 420.9687462275036, n);
  return 418.9829 * double(n) - s;
}

double katsuura(const Vec& z) {
  const double D = double(z.size());
  double prod = 1;
  for (std::size_t i = 0; i < z.size(); ++i) {
    double t = 0;
    for (int j = 1; j <= 32; ++j) {
      const double p = std::pow(2.0, j);
      t += std::fabs(p * z[i] - std::nearbyint(p * z[i])) / p;
    }
    prod *= std::pow(1 + (i + 1.0) * t, 10 / std::pow(D, 1.2));
  }
  return 10 / (D * D) * prod - 10 / (D * D);
}

double lunacek(const Vec& z) {
  const double mu1 = 2.5;
  const double mu2 = -2.5;
  const double D = double(z.size());
  double a = 0;
  double b = 0;
  double c = 0;
  for (double v : z) {
    a += sq(v - mu1);
    b += sq(v - mu2);
    c += std::cos(2 * PI * (v - mu1));
  }
  return std::min(a, 1 * D + 0.9 * b) + 10 * (D - c);
}

double ackley(const Vec& z) {
  const double D = double(z.size());
  double a = 0;
  double b = 0;
  for (double v : z) {
    a += v * v;
    b += std::cos(2 * PI * v);
  }
  return -20 * std::exp(-0.2 * std::sqrt(a / D)) - std::exp(b / D) + 20 + E;
}

double happycat(const Vec& z) {
  const double D = double(z.size());
  double a = 0;
  double b = 0;
  for (double v : z) {
    a += v * v;
    b += v;
  }
  return std::pow(std::fabs(a - D), 0.25) + (0.5 * a + b) / D + 0.5;
}

double hgbat(const Vec& z) {
  const double D = double(z.size());
  double a = 0;
  double b = 0;
  for (double v : z) {
    a += v * v;
    b += v;
  }
  return std::pow(std::fabs(a * a - b * b), 0.5) + (0.5 * a + b) / D + 0.5;
}

double schaffer_f6(const Vec& z) {
  const std::size_t n = z.size();
  double s = 0;
  for (std::size_t i = 0; i < n; ++i) s += g4(z[i], z[(i + 1) % n]);
  return s;
}

double kernel_of(int fn, const Vec& z) { return kBasic[fn].kernel(z); }

bool polynomial(int fn) { return fn >= 0 && fn < 23 && kBasic[fn].poly; }

Vec weights(const Vec& sigma, const std::vector<Vec>& optima, const Vec& x) {
  const std::size_t n = sigma.size();
  const double D = double(x.size());
  Vec d2(n, 0.0);
  std::size_t nearest = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < x.size(); ++j) d2[i] += sq(x[j] - optima[i][j]);
    if (d2[i] < d2[nearest]) nearest = i;
  }
  Vec w(n, 0.0);
  if (std::sqrt(d2[nearest]) < 1e-12) {
    w[nearest] = 1;
    return w;
  }
  double total = 0;
  for (std::size_t i = 0; i < n; ++i) {
    w[i] = 1 / std::sqrt(d2[i]) * std::exp(-d2[i] / (2 * D * sigma[i] * sigma[i]));
    total += w[i];
  }
  for (auto& v : w) v /= total;
  return w;
}

CompositionTable composition_table(int fn) {
  switch (fn) {
    case 29: return {{14, 2, 4, 3, 2}, {10, 20, 30, 40, 50}, {1e-10, 1e-6, 1e-26, 1e-6, 1e-6}, {0, 100, 200, 300, 400}};
    case 30: return {{16, 11, 21}, {15, 15, 15}, {1, 1, 1}, {0, 100, 200}};
    case 31: return {{16, 11, 2}, {20, 50, 40}, {0.25, 1, 1e-7}, {0, 100, 200}};
    case 32: return {{16, 20, 2, 8, 9}, {20, 15, 10, 10, 40}, {2.5e-2, 0.1, 1e-8, 0.25, 1}, {0, 100, 200, 300, 400}};
    case 33: return {{21, 11, 16, 8, 2}, {15, 15, 15, 15, 15}, {10, 10, 2.5, 2.5, 1e-6}, {0, 100, 200, 300, 400}};
    case 34: return {{13, 20, 16, 22, 2}, {10, 20, 30, 40, 50}, {2.5, 10, 2.5, 5e-4, 1e-6}, {0, 100, 200, 300, 400}};
    case 35: return {{23, 24, 25}, {10, 30, 50}, {1, 1, 1}, {0, 100, 200}};
    case 36: return {{26, 27, 28}, {10, 30, 50}, {1, 1, 1}, {0, 100, 200}};
    default: throw std::invalid_argument("not a composition");
  }
}

HybridTable hybrid_table(int fn) {
  switch (fn) {
    case 23: return {{16, 11, 2}, {0.3, 0.3, 0.4}};
    case 24: return {{4, 21, 11}, {0.3, 0.3, 0.4}};
    case 25: return {{9, 8, 14, 22}, {0.2, 0.2, 0.3, 0.3}};
    case 26: return {{21, 3, 13, 11}, {0.2, 0.2, 0.3, 0.3}};
    case 27: return {{22, 21, 14, 16, 2}, {0.1, 0.2, 0.2, 0.2, 0.3}};
    case 28: return {{17, 20, 13, 16, 19}, {0.1, 0.2, 0.2, 0.2, 0.3}};
    default: throw std::invalid_argument("not a hybrid");
  }
}

double raw(const Data& d, const Vec& x) {
  if (d.fn < 23) return basic_raw(d, x);
  if (d.fn < 29) return hybrid_raw(d, x);
  return composition_raw(d, x);
}

double eval(const Data& d, const Vec& x) { return raw(d, x) + 100; }

std::string name(int fn) {
  if (fn < 23) return kBasic[fn].name;
  if (fn < 29) return "HYBRID" + std::to_string(fn - 22);
  return "COMPOSITION" + std::to_string(fn - 28);
}

}  // namespace ref
