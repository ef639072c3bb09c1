#include "gp/pair_table.hpp"

#include "gp/errors.hpp"

namespace gp {

QSqrt2 domain_lo() { return QSqrt2::halfint(-1, -1); }
QSqrt2 domain_hi() { return QSqrt2::halfint(1, 0); }

const std::vector<GPPairEntry>& theorem_table() {
  static const std::vector<GPPairEntry> rows = [] {
    auto h = [](const char* c, const char* d) { return QSqrt2::halfint(BigInt(c), BigInt(d)); };
    auto t = [](const char* alpha, const char* beta, long l) {
      return AlgebraicTarget{BigInt(alpha), BigInt(beta), l};
    };
    return std::vector<GPPairEntry>{
        {1, h("-1", "-1"), h("2", "1"), t("1", "1", 0)},
        {2, h("2", "1"), h("19", "13"), t("11", "5", 3)},
        {3, h("19", "13"), h("77", "54"), t("45", "19", 5)},
        {4, h("77", "54"), h("309", "218"), t("181", "75", 7)},
        {5, h("309", "218"), h("1296121037", "916495974"), t("1", "0", 0)},
        {6, h("1296121037", "916495974"), h("79109", "55938"), t("759250125", "314491699", 29)},
        {7, h("79109", "55938"), h("5", "3"), t("46341", "19195", 15)},
        {8, h("5", "3"), h("1", "0"), t("3", "1", 1)},
    };
  }();
  return rows;
}

const GPPairEntry& table_row(int index) {
  if (index < 1 || index > 8) throw RangeError("pair index must be in 1..8");
  return theorem_table()[static_cast<std::size_t>(index - 1)];
}

std::optional<std::pair<BigInt, BigInt>> halfint_coords(const QSqrt2& x) {
  BigRat c = BigRat(2) * x.b();
  if (!c.is_integer() || !x.a().is_integer()) return std::nullopt;
  return std::make_pair(c.num(), BigInt(-x.a().num()));
}

}  // namespace gp
