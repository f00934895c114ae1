#pragma once

namespace ttw4d {

#if defined(TTW4D_EXTENDED_PRECISION)
using real = long double;
#else
using real = double;
#endif

}  // namespace ttw4d
