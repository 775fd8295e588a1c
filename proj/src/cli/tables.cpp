#include "typeec/cli/tables.hpp"

namespace typeec::cli {

const ReferencePotential& type_b_printed() {
  static const ReferencePotential row{"B", "(x^z+yzx+zy^2)+(xzy+y^2z+zx^2)+c(xyx+yxy+z^3)", "c^3-lambda c+2"};
  return row;
}

const ReferencePotential& type_b_derived() {
  static const ReferencePotential row{"B (derived)", "(x^2z+yzx+zy^2)+(xzy+y^2z+zx^2)+c(xyx+yxy+z^3)",
                                      "c^3-3 lambda c+2"};
  return row;
}

const ReferencePotential& type_e_first() {
  static const ReferencePotential row{
      "E tau2^2", "xzx+eta zx^2+eta^8 x^2z+yxy+eta^4 xy^2+eta^5 y^2x+zyz+eta^7 yz^2+eta^2 z^2y", ""};
  return row;
}

const ReferencePotential& type_e_second() {
  static const ReferencePotential row{
      "E tau2^4", "xzx+eta^8 zx^2+eta x^2z+yxy+eta^5 xy^2+eta^4 y^2x+zyz+eta^2 yz^2+eta^7 z^2y", ""};
  return row;
}

const ReferencePotential& type_h_first() {
  static const ReferencePotential row{
      "H tau3",
      "(eps xyz+lambda yzx+eps^2 zxy)+(lambda xzy+eps yxz+eps^2 zyx)"
      "+(eps lambda x^2y+xyx+eps^2 lambda yx^2)+(eps^2 x^2z+xzx+eps zx^2)"
      "+(eps lambda y^2x+yxy+eps^2 lambda yx^2)+(eps^2 y^2z+yzy+eps zy^2)"
      "+(z^2x+lambda zxz+xz^2)+(z^2y+lambda zyz+yz^2)+(x^3+y^3+lambda z^3)",
      ""};
  return row;
}

const ReferencePotential& type_h_third() {
  static const ReferencePotential row{
      "H tau3^3",
      "(eps^2 xyz+lambda yzx+eps zxy)+(lambda xzy+eps^2 yxz+eps zyx)"
      "+(eps^2 lambda x^2y+xyx+eps lambda yx^2)+(eps x^2z+xzx+eps^2 zx^2)"
      "+(eps^2 lambda y^2x+yxy+eps lambda yx^2)+(eps y^2z+yzy+eps^2 zy^2)"
      "+(z^2x+lambda zxz+xz^2)+(z^2y+lambda zyz+yz^2)+(x^3+y^3+lambda z^3)",
      ""};
  return row;
}

namespace {

ReferencePotential with_y_group_fixed(const ReferencePotential& printed, const std::string& bad,
                                      const std::string& good) {
  ReferencePotential row = printed;
  row.name += " (derived)";
  // The second occurrence sits in the y-group.
  const auto first = row.text.find(bad);
  const auto second = row.text.find(bad, first + 1);
  row.text.replace(second, bad.size(), good);
  return row;
}

}  // namespace

const ReferencePotential& type_h_first_derived() {
  static const ReferencePotential row =
      with_y_group_fixed(type_h_first(), "eps^2 lambda yx^2", "eps^2 lambda xy^2");
  return row;
}

const ReferencePotential& type_h_third_derived() {
  static const ReferencePotential row = with_y_group_fixed(type_h_third(), "eps lambda yx^2", "eps lambda xy^2");
  return row;
}

const std::vector<std::string>& type_e_displayed_derivatives() {
  static const std::vector<std::string> rows{"zx+eta^8 xz+eta^4 y^2", "xy+eta^5 yx+eta^7 z^2",
                                             "eta x^2+yz+eta^2 zy"};
  return rows;
}

const std::vector<std::string>& type_e_printed_scalars() {
  static const std::vector<std::string> s{"eta^8", "eta^5", "eta^2"};
  return s;
}

const std::string& type_e_second_point() {
  static const std::string p = "eta:eta^5:1";
  return p;
}

const std::vector<std::string>& order_nine_listing() {
  static const std::vector<std::string> points{
      "eta^8:eta^4:1", "eta^2:eta:1",   "eta^5:eta^7:1", "eta^5:eta:1",   "eta^2:eta^4:1", "eta^8:eta^7:1",
      "eta^5:eta^4:1", "eta^8:eta:1",   "eta^2:eta^7:1", "eta:eta^5:1",   "eta^4:eta^2:1", "eta^7:eta^8:1",
      "eta^4:eta^8:1", "eta:eta^2:1",   "eta^7:eta^5:1", "eta^4:eta^5:1", "eta^7:eta^2:1", "eta:eta^8:1"};
  return points;
}

const std::vector<std::string>& j0_two_torsion_listing() {
  static const std::vector<std::string> c{"-cbrt2", "-cbrt2 eps", "-cbrt2 eps^2"};
  return c;
}

}  // namespace typeec::cli
