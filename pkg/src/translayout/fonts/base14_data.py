"""Metric tables for the built-in (non-embedded) base text fonts.

Widths are per-mille of the em, keyed by cp1252 character code; ascent and
descent are per-mille as well.  Generated from the Adobe core AFM files.
"""

BASE14_METRICS = {
    "Helvetica": {
        "ascent": 718,
        "descent": -207,
        "widths": {32: 278, 33: 278, 34: 355, 35: 556, 36: 556, 37: 889, 38: 667, 39: 191, 40: 333, 41: 333, 42: 389, 43: 584, 44: 278, 45: 333, 46: 278, 47: 278, 48: 556, 49: 556, 50: 556, 51: 556, 52: 556, 53: 556, 54: 556, 55: 556, 56: 556, 57: 556, 58: 278, 59: 278, 60: 584, 61: 584, 62: 584, 63: 556, 64: 1015, 65: 667, 66: 667, 67: 722, 68: 722, 69: 667, 70: 611, 71: 778, 72: 722, 73: 278, 74: 500, 75: 667, 76: 556, 77: 833, 78: 722, 79: 778, 80: 667, 81: 778, 82: 722, 83: 667, 84: 611, 85: 722, 86: 667, 87: 944, 88: 667, 89: 667, 90: 611, 91: 278, 92: 278, 93: 278, 94: 469, 95: 556, 96: 333, 97: 556, 98: 556, 99: 500, 100: 556, 101: 556, 102: 278, 103: 556, 104: 556, 105: 222, 106: 222, 107: 500, 108: 222, 109: 833, 110: 556, 111: 556, 112: 556, 113: 556, 114: 333, 115: 500, 116: 278, 117: 556, 118: 500, 119: 722, 120: 500, 121: 500, 122: 500, 123: 334, 124: 260, 125: 334, 126: 584, 133: 1000, 134: 556, 135: 556, 137: 1000, 138: 667, 139: 333, 140: 1000, 142: 611, 145: 222, 146: 222, 147: 333, 148: 333, 149: 350, 150: 556, 151: 1000, 153: 1000, 154: 500, 155: 333, 156: 944, 158: 500, 159: 667, 161: 333, 162: 556, 163: 556, 165: 556, 166: 260, 167: 556, 168: 333, 169: 737, 170: 370, 171: 556, 172: 584, 174: 737, 175: 333, 176: 400, 177: 584, 180: 333, 181: 556, 182: 537, 183: 278, 184: 333, 186: 365, 187: 556, 189: 834, 191: 611, 192: 667, 193: 667, 194: 667, 195: 667, 196: 667, 197: 667, 198: 1000, 199: 722, 200: 667, 201: 667, 202: 667, 203: 667, 204: 278, 205: 278, 206: 278, 207: 278, 208: 722, 209: 722, 210: 778, 211: 778, 212: 778, 213: 778, 214: 778, 215: 584, 216: 778, 217: 722, 218: 722, 219: 722, 220: 722, 221: 667, 222: 667, 223: 611, 224: 556, 225: 556, 226: 556, 227: 556, 228: 556, 229: 556, 230: 889, 231: 500, 232: 556, 233: 556, 234: 556, 235: 556, 236: 278, 237: 278, 238: 278, 239: 278, 240: 556, 241: 556, 242: 556, 243: 556, 244: 556, 245: 556, 246: 556, 247: 584, 248: 611, 249: 556, 250: 556, 251: 556, 252: 556, 253: 500, 254: 556, 255: 500},
    },
    "Helvetica-Bold": {
        "ascent": 718,
        "descent": -207,
        "widths": {32: 278, 33: 333, 34: 474, 35: 556, 36: 556, 37: 889, 38: 722, 39: 238, 40: 333, 41: 333, 42: 389, 43: 584, 44: 278, 45: 333, 46: 278, 47: 278, 48: 556, 49: 556, 50: 556, 51: 556, 52: 556, 53: 556, 54: 556, 55: 556, 56: 556, 57: 556, 58: 333, 59: 333, 60: 584, 61: 584, 62: 584, 63: 611, 64: 975, 65: 722, 66: 722, 67: 722, 68: 722, 69: 667, 70: 611, 71: 778, 72: 722, 73: 278, 74: 556, 75: 722, 76: 611, 77: 833, 78: 722, 79: 778, 80: 667, 81: 778, 82: 722, 83: 667, 84: 611, 85: 722, 86: 667, 87: 944, 88: 667, 89: 667, 90: 611, 91: 333, 92: 278, 93: 333, 94: 584, 95: 556, 96: 333, 97: 556, 98: 611, 99: 556, 100: 611, 101: 556, 102: 333, 103: 611, 104: 611, 105: 278, 106: 278, 107: 556, 108: 278, 109: 889, 110: 611, 111: 611, 112: 611, 113: 611, 114: 389, 115: 556, 116: 333, 117: 611, 118: 556, 119: 778, 120: 556, 121: 556, 122: 500, 123: 389, 124: 280, 125: 389, 126: 584, 133: 1000, 134: 556, 135: 556, 137: 1000, 138: 667, 139: 333, 140: 1000, 142: 611, 145: 278, 146: 278, 147: 500, 148: 500, 149: 350, 150: 556, 151: 1000, 153: 1000, 154: 556, 155: 333, 156: 944, 158: 500, 159: 667, 161: 333, 162: 556, 163: 556, 165: 556, 166: 280, 167: 556, 168: 333, 169: 737, 170: 370, 171: 556, 172: 584, 174: 737, 175: 333, 176: 400, 177: 584, 180: 333, 181: 611, 182: 556, 183: 278, 184: 333, 186: 365, 187: 556, 189: 834, 191: 611, 192: 722, 193: 722, 194: 722, 195: 722, 196: 722, 197: 722, 198: 1000, 199: 722, 200: 667, 201: 667, 202: 667, 203: 667, 204: 278, 205: 278, 206: 278, 207: 278, 208: 722, 209: 722, 210: 778, 211: 778, 212: 778, 213: 778, 214: 778, 215: 584, 216: 778, 217: 722, 218: 722, 219: 722, 220: 722, 221: 667, 222: 667, 223: 611, 224: 556, 225: 556, 226: 556, 227: 556, 228: 556, 229: 556, 230: 889, 231: 556, 232: 556, 233: 556, 234: 556, 235: 556, 236: 278, 237: 278, 238: 278, 239: 278, 240: 611, 241: 611, 242: 611, 243: 611, 244: 611, 245: 611, 246: 611, 247: 584, 248: 611, 249: 611, 250: 611, 251: 611, 252: 611, 253: 556, 254: 611, 255: 556},
    },
    "Helvetica-Oblique": {
        "ascent": 718,
        "descent": -207,
        "widths": {32: 278, 33: 278, 34: 355, 35: 556, 36: 556, 37: 889, 38: 667, 39: 191, 40: 333, 41: 333, 42: 389, 43: 584, 44: 278, 45: 333, 46: 278, 47: 278, 48: 556, 49: 556, 50: 556, 51: 556, 52: 556, 53: 556, 54: 556, 55: 556, 56: 556, 57: 556, 58: 278, 59: 278, 60: 584, 61: 584, 62: 584, 63: 556, 64: 1015, 65: 667, 66: 667, 67: 722, 68: 722, 69: 667, 70: 611, 71: 778, 72: 722, 73: 278, 74: 500, 75: 667, 76: 556, 77: 833, 78: 722, 79: 778, 80: 667, 81: 778, 82: 722, 83: 667, 84: 611, 85: 722, 86: 667, 87: 944, 88: 667, 89: 667, 90: 611, 91: 278, 92: 278, 93: 278, 94: 469, 95: 556, 96: 333, 97: 556, 98: 556, 99: 500, 100: 556, 101: 556, 102: 278, 103: 556, 104: 556, 105: 222, 106: 222, 107: 500, 108: 222, 109: 833, 110: 556, 111: 556, 112: 556, 113: 556, 114: 333, 115: 500, 116: 278, 117: 556, 118: 500, 119: 722, 120: 500, 121: 500, 122: 500, 123: 334, 124: 260, 125: 334, 126: 584, 133: 1000, 134: 556, 135: 556, 137: 1000, 138: 667, 139: 333, 140: 1000, 142: 611, 145: 222, 146: 222, 147: 333, 148: 333, 149: 350, 150: 556, 151: 1000, 153: 1000, 154: 500, 155: 333, 156: 944, 158: 500, 159: 667, 161: 333, 162: 556, 163: 556, 165: 556, 166: 260, 167: 556, 168: 333, 169: 737, 170: 370, 171: 556, 172: 584, 174: 737, 175: 333, 176: 400, 177: 584, 180: 333, 181: 556, 182: 537, 183: 278, 184: 333, 186: 365, 187: 556, 189: 834, 191: 611, 192: 667, 193: 667, 194: 667, 195: 667, 196: 667, 197: 667, 198: 1000, 199: 722, 200: 667, 201: 667, 202: 667, 203: 667, 204: 278, 205: 278, 206: 278, 207: 278, 208: 722, 209: 722, 210: 778, 211: 778, 212: 778, 213: 778, 214: 778, 215: 584, 216: 778, 217: 722, 218: 722, 219: 722, 220: 722, 221: 667, 222: 667, 223: 611, 224: 556, 225: 556, 226: 556, 227: 556, 228: 556, 229: 556, 230: 889, 231: 500, 232: 556, 233: 556, 234: 556, 235: 556, 236: 278, 237: 278, 238: 278, 239: 278, 240: 556, 241: 556, 242: 556, 243: 556, 244: 556, 245: 556, 246: 556, 247: 584, 248: 611, 249: 556, 250: 556, 251: 556, 252: 556, 253: 500, 254: 556, 255: 500},
    },
    "Helvetica-BoldOblique": {
        "ascent": 718,
        "descent": -207,
        "widths": {32: 278, 33: 333, 34: 474, 35: 556, 36: 556, 37: 889, 38: 722, 39: 238, 40: 333, 41: 333, 42: 389, 43: 584, 44: 278, 45: 333, 46: 278, 47: 278, 48: 556, 49: 556, 50: 556, 51: 556, 52: 556, 53: 556, 54: 556, 55: 556, 56: 556, 57: 556, 58: 333, 59: 333, 60: 584, 61: 584, 62: 584, 63: 611, 64: 975, 65: 722, 66: 722, 67: 722, 68: 722, 69: 667, 70: 611, 71: 778, 72: 722, 73: 278, 74: 556, 75: 722, 76: 611, 77: 833, 78: 722, 79: 778, 80: 667, 81: 778, 82: 722, 83: 667, 84: 611, 85: 722, 86: 667, 87: 944, 88: 667, 89: 667, 90: 611, 91: 333, 92: 278, 93: 333, 94: 584, 95: 556, 96: 333, 97: 556, 98: 611, 99: 556, 100: 611, 101: 556, 102: 333, 103: 611, 104: 611, 105: 278, 106: 278, 107: 556, 108: 278, 109: 889, 110: 611, 111: 611, 112: 611, 113: 611, 114: 389, 115: 556, 116: 333, 117: 611, 118: 556, 119: 778, 120: 556, 121: 556, 122: 500, 123: 389, 124: 280, 125: 389, 126: 584, 133: 1000, 134: 556, 135: 556, 137: 1000, 138: 667, 139: 333, 140: 1000, 142: 611, 145: 278, 146: 278, 147: 500, 148: 500, 149: 350, 150: 556, 151: 1000, 153: 1000, 154: 556, 155: 333, 156: 944, 158: 500, 159: 667, 161: 333, 162: 556, 163: 556, 165: 556, 166: 280, 167: 556, 168: 333, 169: 737, 170: 370, 171: 556, 172: 584, 174: 737, 175: 333, 176: 400, 177: 584, 180: 333, 181: 611, 182: 556, 183: 278, 184: 333, 186: 365, 187: 556, 189: 834, 191: 611, 192: 722, 193: 722, 194: 722, 195: 722, 196: 722, 197: 722, 198: 1000, 199: 722, 200: 667, 201: 667, 202: 667, 203: 667, 204: 278, 205: 278, 206: 278, 207: 278, 208: 722, 209: 722, 210: 778, 211: 778, 212: 778, 213: 778, 214: 778, 215: 584, 216: 778, 217: 722, 218: 722, 219: 722, 220: 722, 221: 667, 222: 667, 223: 611, 224: 556, 225: 556, 226: 556, 227: 556, 228: 556, 229: 556, 230: 889, 231: 556, 232: 556, 233: 556, 234: 556, 235: 556, 236: 278, 237: 278, 238: 278, 239: 278, 240: 611, 241: 611, 242: 611, 243: 611, 244: 611, 245: 611, 246: 611, 247: 584, 248: 611, 249: 611, 250: 611, 251: 611, 252: 611, 253: 556, 254: 611, 255: 556},
    },
    "Times-Roman": {
        "ascent": 683,
        "descent": -217,
        "widths": {32: 250, 33: 333, 34: 408, 35: 500, 36: 500, 37: 833, 38: 778, 39: 180, 40: 333, 41: 333, 42: 500, 43: 564, 44: 250, 45: 333, 46: 250, 47: 278, 48: 500, 49: 500, 50: 500, 51: 500, 52: 500, 53: 500, 54: 500, 55: 500, 56: 500, 57: 500, 58: 278, 59: 278, 60: 564, 61: 564, 62: 564, 63: 444, 64: 921, 65: 722, 66: 667, 67: 667, 68: 722, 69: 611, 70: 556, 71: 722, 72: 722, 73: 333, 74: 389, 75: 722, 76: 611, 77: 889, 78: 722, 79: 722, 80: 556, 81: 722, 82: 667, 83: 556, 84: 611, 85: 722, 86: 722, 87: 944, 88: 722, 89: 722, 90: 611, 91: 333, 92: 278, 93: 333, 94: 469, 95: 500, 96: 333, 97: 444, 98: 500, 99: 444, 100: 500, 101: 444, 102: 333, 103: 500, 104: 500, 105: 278, 106: 278, 107: 500, 108: 278, 109: 778, 110: 500, 111: 500, 112: 500, 113: 500, 114: 333, 115: 389, 116: 278, 117: 500, 118: 500, 119: 722, 120: 500, 121: 500, 122: 444, 123: 480, 124: 200, 125: 480, 126: 541, 133: 1000, 134: 500, 135: 500, 137: 1000, 138: 556, 139: 333, 140: 889, 142: 611, 145: 333, 146: 333, 147: 444, 148: 444, 149: 350, 150: 500, 151: 1000, 153: 980, 154: 389, 155: 333, 156: 722, 158: 444, 159: 722, 161: 333, 162: 500, 163: 500, 165: 500, 166: 200, 167: 500, 168: 333, 169: 760, 170: 276, 171: 500, 172: 564, 174: 760, 175: 333, 176: 400, 177: 564, 180: 333, 181: 500, 182: 453, 183: 250, 184: 333, 186: 310, 187: 500, 189: 750, 191: 444, 192: 722, 193: 722, 194: 722, 195: 722, 196: 722, 197: 722, 198: 889, 199: 667, 200: 611, 201: 611, 202: 611, 203: 611, 204: 333, 205: 333, 206: 333, 207: 333, 208: 722, 209: 722, 210: 722, 211: 722, 212: 722, 213: 722, 214: 722, 215: 564, 216: 722, 217: 722, 218: 722, 219: 722, 220: 722, 221: 722, 222: 556, 223: 500, 224: 444, 225: 444, 226: 444, 227: 444, 228: 444, 229: 444, 230: 667, 231: 444, 232: 444, 233: 444, 234: 444, 235: 444, 236: 278, 237: 278, 238: 278, 239: 278, 240: 500, 241: 500, 242: 500, 243: 500, 244: 500, 245: 500, 246: 500, 247: 564, 248: 500, 249: 500, 250: 500, 251: 500, 252: 500, 253: 500, 254: 500, 255: 500},
    },
    "Times-Bold": {
        "ascent": 676,
        "descent": -205,
        "widths": {32: 250, 33: 333, 34: 555, 35: 500, 36: 500, 37: 1000, 38: 833, 39: 278, 40: 333, 41: 333, 42: 500, 43: 570, 44: 250, 45: 333, 46: 250, 47: 278, 48: 500, 49: 500, 50: 500, 51: 500, 52: 500, 53: 500, 54: 500, 55: 500, 56: 500, 57: 500, 58: 333, 59: 333, 60: 570, 61: 570, 62: 570, 63: 500, 64: 930, 65: 722, 66: 667, 67: 722, 68: 722, 69: 667, 70: 611, 71: 778, 72: 778, 73: 389, 74: 500, 75: 778, 76: 667, 77: 944, 78: 722, 79: 778, 80: 611, 81: 778, 82: 722, 83: 556, 84: 667, 85: 722, 86: 722, 87: 1000, 88: 722, 89: 722, 90: 667, 91: 333, 92: 278, 93: 333, 94: 581, 95: 500, 96: 333, 97: 500, 98: 556, 99: 444, 100: 556, 101: 444, 102: 333, 103: 500, 104: 556, 105: 278, 106: 333, 107: 556, 108: 278, 109: 833, 110: 556, 111: 500, 112: 556, 113: 556, 114: 444, 115: 389, 116: 333, 117: 556, 118: 500, 119: 722, 120: 500, 121: 500, 122: 444, 123: 394, 124: 220, 125: 394, 126: 520, 133: 1000, 134: 500, 135: 500, 137: 1000, 138: 556, 139: 333, 140: 1000, 142: 667, 145: 333, 146: 333, 147: 500, 148: 500, 149: 350, 150: 500, 151: 1000, 153: 1000, 154: 389, 155: 333, 156: 722, 158: 444, 159: 722, 161: 333, 162: 500, 163: 500, 165: 500, 166: 220, 167: 500, 168: 333, 169: 747, 170: 300, 171: 500, 172: 570, 174: 747, 175: 333, 176: 400, 177: 570, 180: 333, 181: 556, 182: 540, 183: 250, 184: 333, 186: 330, 187: 500, 189: 750, 191: 500, 192: 722, 193: 722, 194: 722, 195: 722, 196: 722, 197: 722, 198: 1000, 199: 722, 200: 667, 201: 667, 202: 667, 203: 667, 204: 389, 205: 389, 206: 389, 207: 389, 208: 722, 209: 722, 210: 778, 211: 778, 212: 778, 213: 778, 214: 778, 215: 570, 216: 778, 217: 722, 218: 722, 219: 722, 220: 722, 221: 722, 222: 611, 223: 556, 224: 500, 225: 500, 226: 500, 227: 500, 228: 500, 229: 500, 230: 722, 231: 444, 232: 444, 233: 444, 234: 444, 235: 444, 236: 278, 237: 278, 238: 278, 239: 278, 240: 500, 241: 556, 242: 500, 243: 500, 244: 500, 245: 500, 246: 500, 247: 570, 248: 500, 249: 556, 250: 556, 251: 556, 252: 556, 253: 500, 254: 556, 255: 500},
    },
    "Times-Italic": {
        "ascent": 683,
        "descent": -205,
        "widths": {32: 250, 33: 333, 34: 420, 35: 500, 36: 500, 37: 833, 38: 778, 39: 214, 40: 333, 41: 333, 42: 500, 43: 675, 44: 250, 45: 333, 46: 250, 47: 278, 48: 500, 49: 500, 50: 500, 51: 500, 52: 500, 53: 500, 54: 500, 55: 500, 56: 500, 57: 500, 58: 333, 59: 333, 60: 675, 61: 675, 62: 675, 63: 500, 64: 920, 65: 611, 66: 611, 67: 667, 68: 722, 69: 611, 70: 611, 71: 722, 72: 722, 73: 333, 74: 444, 75: 667, 76: 556, 77: 833, 78: 667, 79: 722, 80: 611, 81: 722, 82: 611, 83: 500, 84: 556, 85: 722, 86: 611, 87: 833, 88: 611, 89: 556, 90: 556, 91: 389, 92: 278, 93: 389, 94: 422, 95: 500, 96: 333, 97: 500, 98: 500, 99: 444, 100: 500, 101: 444, 102: 278, 103: 500, 104: 500, 105: 278, 106: 278, 107: 444, 108: 278, 109: 722, 110: 500, 111: 500, 112: 500, 113: 500, 114: 389, 115: 389, 116: 278, 117: 500, 118: 444, 119: 667, 120: 444, 121: 444, 122: 389, 123: 400, 124: 275, 125: 400, 126: 541, 133: 889, 134: 500, 135: 500, 137: 1000, 138: 500, 139: 333, 140: 944, 142: 556, 145: 333, 146: 333, 147: 556, 148: 556, 149: 350, 150: 500, 151: 889, 153: 980, 154: 389, 155: 333, 156: 667, 158: 389, 159: 556, 161: 389, 162: 500, 163: 500, 165: 500, 166: 275, 167: 500, 168: 333, 169: 760, 170: 276, 171: 500, 172: 675, 174: 760, 175: 333, 176: 400, 177: 675, 180: 333, 181: 500, 182: 523, 183: 250, 184: 333, 186: 310, 187: 500, 189: 750, 191: 500, 192: 611, 193: 611, 194: 611, 195: 611, 196: 611, 197: 611, 198: 889, 199: 667, 200: 611, 201: 611, 202: 611, 203: 611, 204: 333, 205: 333, 206: 333, 207: 333, 208: 722, 209: 667, 210: 722, 211: 722, 212: 722, 213: 722, 214: 722, 215: 675, 216: 722, 217: 722, 218: 722, 219: 722, 220: 722, 221: 556, 222: 611, 223: 500, 224: 500, 225: 500, 226: 500, 227: 500, 228: 500, 229: 500, 230: 667, 231: 444, 232: 444, 233: 444, 234: 444, 235: 444, 236: 278, 237: 278, 238: 278, 239: 278, 240: 500, 241: 500, 242: 500, 243: 500, 244: 500, 245: 500, 246: 500, 247: 675, 248: 500, 249: 500, 250: 500, 251: 500, 252: 500, 253: 444, 254: 500, 255: 444},
    },
    "Times-BoldItalic": {
        "ascent": 699,
        "descent": -205,
        "widths": {32: 250, 33: 389, 34: 555, 35: 500, 36: 500, 37: 833, 38: 778, 39: 278, 40: 333, 41: 333, 42: 500, 43: 570, 44: 250, 45: 333, 46: 250, 47: 278, 48: 500, 49: 500, 50: 500, 51: 500, 52: 500, 53: 500, 54: 500, 55: 500, 56: 500, 57: 500, 58: 333, 59: 333, 60: 570, 61: 570, 62: 570, 63: 500, 64: 832, 65: 667, 66: 667, 67: 667, 68: 722, 69: 667, 70: 667, 71: 722, 72: 778, 73: 389, 74: 500, 75: 667, 76: 611, 77: 889, 78: 722, 79: 722, 80: 611, 81: 722, 82: 667, 83: 556, 84: 611, 85: 722, 86: 667, 87: 889, 88: 667, 89: 611, 90: 611, 91: 333, 92: 278, 93: 333, 94: 570, 95: 500, 96: 333, 97: 500, 98: 500, 99: 444, 100: 500, 101: 444, 102: 333, 103: 500, 104: 556, 105: 278, 106: 278, 107: 500, 108: 278, 109: 778, 110: 556, 111: 500, 112: 500, 113: 500, 114: 389, 115: 389, 116: 278, 117: 556, 118: 444, 119: 667, 120: 500, 121: 444, 122: 389, 123: 348, 124: 220, 125: 348, 126: 570, 133: 1000, 134: 500, 135: 500, 137: 1000, 138: 556, 139: 333, 140: 944, 142: 611, 145: 333, 146: 333, 147: 500, 148: 500, 149: 350, 150: 500, 151: 1000, 153: 1000, 154: 389, 155: 333, 156: 722, 158: 389, 159: 611, 161: 389, 162: 500, 163: 500, 165: 500, 166: 220, 167: 500, 168: 333, 169: 747, 170: 266, 171: 500, 172: 606, 174: 747, 175: 333, 176: 400, 177: 570, 180: 333, 181: 576, 182: 500, 183: 250, 184: 333, 186: 300, 187: 500, 189: 750, 191: 500, 192: 667, 193: 667, 194: 667, 195: 667, 196: 667, 197: 667, 198: 944, 199: 667, 200: 667, 201: 667, 202: 667, 203: 667, 204: 389, 205: 389, 206: 389, 207: 389, 208: 722, 209: 722, 210: 722, 211: 722, 212: 722, 213: 722, 214: 722, 215: 570, 216: 722, 217: 722, 218: 722, 219: 722, 220: 722, 221: 611, 222: 611, 223: 500, 224: 500, 225: 500, 226: 500, 227: 500, 228: 500, 229: 500, 230: 722, 231: 444, 232: 444, 233: 444, 234: 444, 235: 444, 236: 278, 237: 278, 238: 278, 239: 278, 240: 500, 241: 556, 242: 500, 243: 500, 244: 500, 245: 500, 246: 500, 247: 570, 248: 500, 249: 556, 250: 556, 251: 556, 252: 556, 253: 444, 254: 500, 255: 444},
    },
    "Courier": {
        "ascent": 629,
        "descent": -157,
        "widths": {32: 600, 33: 600, 34: 600, 35: 600, 36: 600, 37: 600, 38: 600, 39: 600, 40: 600, 41: 600, 42: 600, 43: 600, 44: 600, 45: 600, 46: 600, 47: 600, 48: 600, 49: 600, 50: 600, 51: 600, 52: 600, 53: 600, 54: 600, 55: 600, 56: 600, 57: 600, 58: 600, 59: 600, 60: 600, 61: 600, 62: 600, 63: 600, 64: 600, 65: 600, 66: 600, 67: 600, 68: 600, 69: 600, 70: 600, 71: 600, 72: 600, 73: 600, 74: 600, 75: 600, 76: 600, 77: 600, 78: 600, 79: 600, 80: 600, 81: 600, 82: 600, 83: 600, 84: 600, 85: 600, 86: 600, 87: 600, 88: 600, 89: 600, 90: 600, 91: 600, 92: 600, 93: 600, 94: 600, 95: 600, 96: 600, 97: 600, 98: 600, 99: 600, 100: 600, 101: 600, 102: 600, 103: 600, 104: 600, 105: 600, 106: 600, 107: 600, 108: 600, 109: 600, 110: 600, 111: 600, 112: 600, 113: 600, 114: 600, 115: 600, 116: 600, 117: 600, 118: 600, 119: 600, 120: 600, 121: 600, 122: 600, 123: 600, 124: 600, 125: 600, 126: 600, 133: 600, 134: 600, 135: 600, 137: 600, 138: 600, 139: 600, 140: 600, 142: 600, 145: 600, 146: 600, 147: 600, 148: 600, 149: 600, 150: 600, 151: 600, 153: 600, 154: 600, 155: 600, 156: 600, 158: 600, 159: 600, 161: 600, 162: 600, 163: 600, 165: 600, 166: 600, 167: 600, 168: 600, 169: 600, 170: 600, 171: 600, 172: 600, 174: 600, 175: 600, 176: 600, 177: 600, 180: 600, 181: 600, 182: 600, 183: 600, 184: 600, 186: 600, 187: 600, 189: 600, 191: 600, 192: 600, 193: 600, 194: 600, 195: 600, 196: 600, 197: 600, 198: 600, 199: 600, 200: 600, 201: 600, 202: 600, 203: 600, 204: 600, 205: 600, 206: 600, 207: 600, 208: 600, 209: 600, 210: 600, 211: 600, 212: 600, 213: 600, 214: 600, 215: 600, 216: 600, 217: 600, 218: 600, 219: 600, 220: 600, 221: 600, 222: 600, 223: 600, 224: 600, 225: 600, 226: 600, 227: 600, 228: 600, 229: 600, 230: 600, 231: 600, 232: 600, 233: 600, 234: 600, 235: 600, 236: 600, 237: 600, 238: 600, 239: 600, 240: 600, 241: 600, 242: 600, 243: 600, 244: 600, 245: 600, 246: 600, 247: 600, 248: 600, 249: 600, 250: 600, 251: 600, 252: 600, 253: 600, 254: 600, 255: 600},
    },
    "Courier-Bold": {
        "ascent": 626,
        "descent": -142,
        "widths": {32: 600, 33: 600, 34: 600, 35: 600, 36: 600, 37: 600, 38: 600, 39: 600, 40: 600, 41: 600, 42: 600, 43: 600, 44: 600, 45: 600, 46: 600, 47: 600, 48: 600, 49: 600, 50: 600, 51: 600, 52: 600, 53: 600, 54: 600, 55: 600, 56: 600, 57: 600, 58: 600, 59: 600, 60: 600, 61: 600, 62: 600, 63: 600, 64: 600, 65: 600, 66: 600, 67: 600, 68: 600, 69: 600, 70: 600, 71: 600, 72: 600, 73: 600, 74: 600, 75: 600, 76: 600, 77: 600, 78: 600, 79: 600, 80: 600, 81: 600, 82: 600, 83: 600, 84: 600, 85: 600, 86: 600, 87: 600, 88: 600, 89: 600, 90: 600, 91: 600, 92: 600, 93: 600, 94: 600, 95: 600, 96: 600, 97: 600, 98: 600, 99: 600, 100: 600, 101: 600, 102: 600, 103: 600, 104: 600, 105: 600, 106: 600, 107: 600, 108: 600, 109: 600, 110: 600, 111: 600, 112: 600, 113: 600, 114: 600, 115: 600, 116: 600, 117: 600, 118: 600, 119: 600, 120: 600, 121: 600, 122: 600, 123: 600, 124: 600, 125: 600, 126: 600, 133: 600, 134: 600, 135: 600, 137: 600, 138: 600, 139: 600, 140: 600, 142: 600, 145: 600, 146: 600, 147: 600, 148: 600, 149: 600, 150: 600, 151: 600, 153: 600, 154: 600, 155: 600, 156: 600, 158: 600, 159: 600, 161: 600, 162: 600, 163: 600, 165: 600, 166: 600, 167: 600, 168: 600, 169: 600, 170: 600, 171: 600, 172: 600, 174: 600, 175: 600, 176: 600, 177: 600, 180: 600, 181: 600, 182: 600, 183: 600, 184: 600, 186: 600, 187: 600, 189: 600, 191: 600, 192: 600, 193: 600, 194: 600, 195: 600, 196: 600, 197: 600, 198: 600, 199: 600, 200: 600, 201: 600, 202: 600, 203: 600, 204: 600, 205: 600, 206: 600, 207: 600, 208: 600, 209: 600, 210: 600, 211: 600, 212: 600, 213: 600, 214: 600, 215: 600, 216: 600, 217: 600, 218: 600, 219: 600, 220: 600, 221: 600, 222: 600, 223: 600, 224: 600, 225: 600, 226: 600, 227: 600, 228: 600, 229: 600, 230: 600, 231: 600, 232: 600, 233: 600, 234: 600, 235: 600, 236: 600, 237: 600, 238: 600, 239: 600, 240: 600, 241: 600, 242: 600, 243: 600, 244: 600, 245: 600, 246: 600, 247: 600, 248: 600, 249: 600, 250: 600, 251: 600, 252: 600, 253: 600, 254: 600, 255: 600},
    },
    "Courier-Oblique": {
        "ascent": 629,
        "descent": -157,
        "widths": {32: 600, 33: 600, 34: 600, 35: 600, 36: 600, 37: 600, 38: 600, 39: 600, 40: 600, 41: 600, 42: 600, 43: 600, 44: 600, 45: 600, 46: 600, 47: 600, 48: 600, 49: 600, 50: 600, 51: 600, 52: 600, 53: 600, 54: 600, 55: 600, 56: 600, 57: 600, 58: 600, 59: 600, 60: 600, 61: 600, 62: 600, 63: 600, 64: 600, 65: 600, 66: 600, 67: 600, 68: 600, 69: 600, 70: 600, 71: 600, 72: 600, 73: 600, 74: 600, 75: 600, 76: 600, 77: 600, 78: 600, 79: 600, 80: 600, 81: 600, 82: 600, 83: 600, 84: 600, 85: 600, 86: 600, 87: 600, 88: 600, 89: 600, 90: 600, 91: 600, 92: 600, 93: 600, 94: 600, 95: 600, 96: 600, 97: 600, 98: 600, 99: 600, 100: 600, 101: 600, 102: 600, 103: 600, 104: 600, 105: 600, 106: 600, 107: 600, 108: 600, 109: 600, 110: 600, 111: 600, 112: 600, 113: 600, 114: 600, 115: 600, 116: 600, 117: 600, 118: 600, 119: 600, 120: 600, 121: 600, 122: 600, 123: 600, 124: 600, 125: 600, 126: 600, 133: 600, 134: 600, 135: 600, 137: 600, 138: 600, 139: 600, 140: 600, 142: 600, 145: 600, 146: 600, 147: 600, 148: 600, 149: 600, 150: 600, 151: 600, 153: 600, 154: 600, 155: 600, 156: 600, 158: 600, 159: 600, 161: 600, 162: 600, 163: 600, 165: 600, 166: 600, 167: 600, 168: 600, 169: 600, 170: 600, 171: 600, 172: 600, 174: 600, 175: 600, 176: 600, 177: 600, 180: 600, 181: 600, 182: 600, 183: 600, 184: 600, 186: 600, 187: 600, 189: 600, 191: 600, 192: 600, 193: 600, 194: 600, 195: 600, 196: 600, 197: 600, 198: 600, 199: 600, 200: 600, 201: 600, 202: 600, 203: 600, 204: 600, 205: 600, 206: 600, 207: 600, 208: 600, 209: 600, 210: 600, 211: 600, 212: 600, 213: 600, 214: 600, 215: 600, 216: 600, 217: 600, 218: 600, 219: 600, 220: 600, 221: 600, 222: 600, 223: 600, 224: 600, 225: 600, 226: 600, 227: 600, 228: 600, 229: 600, 230: 600, 231: 600, 232: 600, 233: 600, 234: 600, 235: 600, 236: 600, 237: 600, 238: 600, 239: 600, 240: 600, 241: 600, 242: 600, 243: 600, 244: 600, 245: 600, 246: 600, 247: 600, 248: 600, 249: 600, 250: 600, 251: 600, 252: 600, 253: 600, 254: 600, 255: 600},
    },
    "Courier-BoldOblique": {
        "ascent": 626,
        "descent": -142,
        "widths": {32: 600, 33: 600, 34: 600, 35: 600, 36: 600, 37: 600, 38: 600, 39: 600, 40: 600, 41: 600, 42: 600, 43: 600, 44: 600, 45: 600, 46: 600, 47: 600, 48: 600, 49: 600, 50: 600, 51: 600, 52: 600, 53: 600, 54: 600, 55: 600, 56: 600, 57: 600, 58: 600, 59: 600, 60: 600, 61: 600, 62: 600, 63: 600, 64: 600, 65: 600, 66: 600, 67: 600, 68: 600, 69: 600, 70: 600, 71: 600, 72: 600, 73: 600, 74: 600, 75: 600, 76: 600, 77: 600, 78: 600, 79: 600, 80: 600, 81: 600, 82: 600, 83: 600, 84: 600, 85: 600, 86: 600, 87: 600, 88: 600, 89: 600, 90: 600, 91: 600, 92: 600, 93: 600, 94: 600, 95: 600, 96: 600, 97: 600, 98: 600, 99: 600, 100: 600, 101: 600, 102: 600, 103: 600, 104: 600, 105: 600, 106: 600, 107: 600, 108: 600, 109: 600, 110: 600, 111: 600, 112: 600, 113: 600, 114: 600, 115: 600, 116: 600, 117: 600, 118: 600, 119: 600, 120: 600, 121: 600, 122: 600, 123: 600, 124: 600, 125: 600, 126: 600, 133: 600, 134: 600, 135: 600, 137: 600, 138: 600, 139: 600, 140: 600, 142: 600, 145: 600, 146: 600, 147: 600, 148: 600, 149: 600, 150: 600, 151: 600, 153: 600, 154: 600, 155: 600, 156: 600, 158: 600, 159: 600, 161: 600, 162: 600, 163: 600, 165: 600, 166: 600, 167: 600, 168: 600, 169: 600, 170: 600, 171: 600, 172: 600, 174: 600, 175: 600, 176: 600, 177: 600, 180: 600, 181: 600, 182: 600, 183: 600, 184: 600, 186: 600, 187: 600, 189: 600, 191: 600, 192: 600, 193: 600, 194: 600, 195: 600, 196: 600, 197: 600, 198: 600, 199: 600, 200: 600, 201: 600, 202: 600, 203: 600, 204: 600, 205: 600, 206: 600, 207: 600, 208: 600, 209: 600, 210: 600, 211: 600, 212: 600, 213: 600, 214: 600, 215: 600, 216: 600, 217: 600, 218: 600, 219: 600, 220: 600, 221: 600, 222: 600, 223: 600, 224: 600, 225: 600, 226: 600, 227: 600, 228: 600, 229: 600, 230: 600, 231: 600, 232: 600, 233: 600, 234: 600, 235: 600, 236: 600, 237: 600, 238: 600, 239: 600, 240: 600, 241: 600, 242: 600, 243: 600, 244: 600, 245: 600, 246: 600, 247: 600, 248: 600, 249: 600, 250: 600, 251: 600, 252: 600, 253: 600, 254: 600, 255: 600},
    },
}

# Glyph-name to unicode ordinal map for simple-font /Differences arrays.
GLYPH_TO_UNICODE = {
    "A": 65, "AE": 198, "Aacute": 193, "Acircumflex": 194,
    "Adieresis": 196, "Agrave": 192, "Aring": 197, "Atilde": 195,
    "B": 66, "C": 67, "Ccedilla": 199, "D": 68,
    "E": 69, "Eacute": 201, "Ecircumflex": 202, "Edieresis": 203,
    "Egrave": 200, "Eth": 208, "F": 70, "G": 71,
    "H": 72, "I": 73, "Iacute": 205, "Icircumflex": 206,
    "Idieresis": 207, "Igrave": 204, "J": 74, "K": 75,
    "L": 76, "Lslash": 321, "M": 77, "N": 78,
    "Ntilde": 209, "O": 79, "OE": 338, "Oacute": 211,
    "Ocircumflex": 212, "Odieresis": 214, "Ograve": 210, "Oslash": 216,
    "Otilde": 213, "P": 80, "Q": 81, "R": 82,
    "S": 83, "Scaron": 352, "T": 84, "Thorn": 222,
    "U": 85, "Uacute": 218, "Ucircumflex": 219, "Udieresis": 220,
    "Ugrave": 217, "V": 86, "W": 87, "X": 88,
    "Y": 89, "Yacute": 221, "Ydieresis": 376, "Z": 90,
    "Zcaron": 381, "a": 97, "aacute": 225, "acircumflex": 226,
    "acute": 180, "adieresis": 228, "ae": 230, "agrave": 224,
    "ampersand": 38, "aring": 229, "asciicircum": 94, "asciitilde": 126,
    "asterisk": 42, "at": 64, "atilde": 227, "b": 98,
    "backslash": 92, "bar": 124, "braceleft": 123, "braceright": 125,
    "bracketleft": 91, "bracketright": 93, "breve": 728, "brokenbar": 166,
    "bullet": 8226, "c": 99, "ccedilla": 231, "cedilla": 184,
    "cent": 162, "colon": 58, "comma": 44, "copyright": 169,
    "d": 100, "dagger": 8224, "daggerdbl": 8225, "degree": 176,
    "dieresis": 168, "divide": 247, "dollar": 36, "dotaccent": 729,
    "dotlessi": 305, "e": 101, "eacute": 233, "ecircumflex": 234,
    "edieresis": 235, "egrave": 232, "eight": 56, "ellipsis": 8230,
    "emdash": 8212, "endash": 8211, "equal": 61, "eth": 240,
    "exclam": 33, "exclamdown": 161, "f": 102, "figuredash": 8210,
    "five": 53, "four": 52, "fraction": 8260, "g": 103,
    "germandbls": 223, "grave": 96, "greater": 62, "guillemotleft": 171,
    "guillemotright": 187, "guilsinglleft": 8249, "guilsinglright": 8250, "h": 104,
    "hungarumlaut": 733, "hyphen": 45, "i": 105, "iacute": 237,
    "icircumflex": 238, "idieresis": 239, "igrave": 236, "j": 106,
    "k": 107, "l": 108, "less": 60, "logicalnot": 172,
    "lslash": 322, "m": 109, "macron": 175, "minus": 8722,
    "mu": 181, "multiply": 215, "n": 110, "nine": 57,
    "ntilde": 241, "numbersign": 35, "o": 111, "oacute": 243,
    "ocircumflex": 244, "odieresis": 246, "oe": 339, "ogonek": 731,
    "ograve": 242, "one": 49, "onehalf": 189, "ordfeminine": 170,
    "ordmasculine": 186, "oslash": 248, "otilde": 245, "p": 112,
    "paragraph": 182, "parenleft": 40, "parenright": 41, "percent": 37,
    "period": 46, "periodcentered": 183, "perthousand": 8240, "plus": 43,
    "plusminus": 177, "q": 113, "question": 63, "questiondown": 191,
    "quotedbl": 34, "quotedblleft": 8220, "quotedblright": 8221, "quoteleft": 8216,
    "quoteright": 8217, "quotesingle": 39, "r": 114, "registered": 174,
    "ring": 730, "s": 115, "scaron": 353, "section": 167,
    "semicolon": 59, "seven": 55, "six": 54, "slash": 47,
    "smalltilde": 732, "space": 32, "sterling": 163, "t": 116,
    "thorn": 254, "three": 51, "trademark": 8482, "two": 50,
    "twodotenleader": 8229, "u": 117, "uacute": 250, "ucircumflex": 251,
    "udieresis": 252, "ugrave": 249, "underscore": 95, "v": 118,
    "w": 119, "x": 120, "y": 121, "yacute": 253,
    "ydieresis": 255, "yen": 165, "z": 122, "zcaron": 382,
    "zero": 48,
}
