#include "corner/gscalar.hpp"
#include <sstream>

namespace corner {

std::string GScalar::str() const
{
	if (terms_.empty())
		return "0";
	std::ostringstream os;
	bool first = true;
	for (auto &[m, c] : terms_)
	{
		if (!first)
			os << " + ";
		first = false;
		os << "(" << c.str() << ")";
		Mask mm = m;
		while (mm)
		{
			int bit = std::countr_zero(mm);
			mm &= mm - 1;
			os << " th" << bit;
		}
	}
	return os.str();
}

} // namespace corner
